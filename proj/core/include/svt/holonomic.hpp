#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "svt/numeric.hpp"
#include "svt/sequence.hpp"

namespace svt {

/// sum_{j=0}^{r} p_j(n) a(n+j) = 0 with p_j(n) = sum_e coeffs[j][e] n^e.
///
/// n is the sequence's own index: the recurrence holds for every n with
/// n and n + r both inside the sequence.
class PolyRecurrence {
 public:
  PolyRecurrence(std::vector<std::vector<BigInt>> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::size_t degree() const { return coeffs_.front().size() - 1; }
  const std::vector<std::vector<BigInt>>& coeffs() const { return coeffs_; }

  /// p_j(n).
  BigInt eval(std::size_t j, std::int64_t n) const;

  /// Content 1, leading coefficient of p_r positive, trailing all-zero
  /// degree columns dropped.
  PolyRecurrence canonical() const;

  friend bool operator==(const PolyRecurrence&, const PolyRecurrence&) = default;

 private:
  std::vector<std::vector<BigInt>> coeffs_;
};

/// The fifth-order recurrence satisfied by C_3, in canonical form.
PolyRecurrence c3_recurrence();

/// The same recurrence re-expressed in n' = n - shift, i.e. p_j(n' + shift).
PolyRecurrence shift_recurrence(const PolyRecurrence& rec, std::int64_t shift);

/// sum_j p_j(n) a(n+j); zero for every n exactly when the recurrence holds.
BigInt residual(const PolyRecurrence& rec, const BigSequence& seq, std::int64_t n);

/// Forward evaluation up to index `upto`. Throws ArithmeticError when p_r(n)
/// vanishes or an integer step leaves a remainder.
BigSequence extend(const PolyRecurrence& rec, const BigSequence& seed, std::int64_t upto);

/// Exact rational forward evaluation, for seeds whose orbit need not stay
/// integral. seed[0] is a(offset).
std::vector<Rational> extend_rational(const PolyRecurrence& rec, std::int64_t offset,
                                      std::vector<Rational> seed, std::int64_t upto);

struct GuessOptions {
  /// Equations in the solved system beyond the unknown count; every window
  /// not in the system is used as hold-out validation.
  std::size_t margin = 5;
};

/// Searches order 1..max_order, then degree 0..max_degree, for a recurrence
/// annihilating seq. Returns the first one that also validates on every
/// remaining term, in canonical form. Throws InsufficientData when no (r, D)
/// pair in range can be set up with the required margin.
std::optional<PolyRecurrence> guess_recurrence(const BigSequence& seq, std::size_t max_order,
                                               std::size_t max_degree,
                                               const GuessOptions& options = {});

/// True iff every window of seq is annihilated exactly.
bool verify(const PolyRecurrence& rec, const BigSequence& seq);

/// Integer null space basis of a matrix (rows of equal length), computed by
/// fraction-free elimination.
std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> rows,
                                                   std::size_t cols);

}  // namespace svt
