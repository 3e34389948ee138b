#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "svt/multi_index.hpp"
#include "svt/numeric.hpp"

namespace svt {

/// Polynomial in d variables with arbitrary-precision integer coefficients.
/// Canonical: no zero coefficient is ever stored, so equality of term maps
/// is equality of polynomials. Iteration is in lexicographic monomial order.
class SparsePoly {
 public:
  using TermMap = std::map<MultiIndex, BigInt>;

  explicit SparsePoly(std::size_t dim);

  static SparsePoly constant(std::size_t dim, const BigInt& c);
  static SparsePoly monomial(const MultiIndex& exponents, const BigInt& c = 1);
  /// x_i (0-based i).
  static SparsePoly variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exponents in place.
  void add_term(const MultiIndex& exponents, const BigInt& c);

  BigInt coefficient(const MultiIndex& exponents) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  TermMap terms_;
};

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_negate(const SparsePoly& p);
SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b);

/// Product of a and b. With a cap, every monomial whose exponent exceeds the
/// cap in any coordinate is discarded (per-variable truncation).
SparsePoly poly_mul_truncated(const SparsePoly& a, const SparsePoly& b,
                              const std::optional<MultiIndex>& cap);

inline SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return poly_add(a, b); }
inline SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return poly_sub(a, b); }
inline SparsePoly operator-(const SparsePoly& p) { return poly_negate(p); }
inline SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  return poly_mul_truncated(a, b, std::nullopt);
}

/// Scales every coefficient by c.
SparsePoly poly_scale(const SparsePoly& p, const BigInt& c);

/// e_i(x_1..x_d); e_0 = 1. Throws UsageError for i > d.
SparsePoly elementary_symmetric(std::size_t d, std::size_t i);

BigInt coefficient(const SparsePoly& p, const MultiIndex& idx);

/// One term per line, "c e_1 ... e_d", lexicographic monomial order.
void write_text(std::ostream& os, const SparsePoly& p);
std::string to_text(const SparsePoly& p);

}  // namespace svt
