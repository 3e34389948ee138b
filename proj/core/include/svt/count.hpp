#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "svt/multi_index.hpp"
#include "svt/numeric.hpp"
#include "svt/sequence.hpp"
#include "svt/sparse_poly.hpp"

namespace svt {

/// Tensor format m_1 x ... x m_d. Zero entries are legal and force a zero
/// count.
class Shape {
 public:
  explicit Shape(MultiIndex dims);
  const MultiIndex& dims() const { return dims_; }
  std::size_t order() const { return dims_.size(); }
  bool degenerate() const { return dims_.any_zero(); }

 private:
  MultiIndex dims_;
};

/// Dense table over the box 0 <= v <= cap, stored row-major with the last
/// coordinate fastest, so linear order is lexicographic order.
class BoxTable {
 public:
  explicit BoxTable(const MultiIndex& cap);

  const MultiIndex& cap() const { return cap_; }
  std::size_t dim() const { return cap_.size(); }
  std::size_t volume() const { return values_.size(); }

  bool contains(const MultiIndex& v) const;
  std::size_t offset(const MultiIndex& v) const;
  MultiIndex index_of(std::size_t linear) const;

  const BigInt& at(const MultiIndex& v) const;
  BigInt& at(const MultiIndex& v);

  const std::vector<BigInt>& values() const { return values_; }
  std::vector<BigInt>& values() { return values_; }

 private:
  MultiIndex cap_;
  std::vector<std::size_t> strides_;
  std::vector<BigInt> values_;
};

/// c(v) for every v in the box 0 <= v <= cap. c(v) = 0 whenever v has a
/// zero coordinate, and c is symmetric under permuting coordinates.
class CountTable {
 public:
  explicit CountTable(BoxTable values);

  std::size_t dim() const { return table_.dim(); }
  const MultiIndex& cap() const { return table_.cap(); }
  const BigInt& at(const MultiIndex& v) const { return table_.at(v); }
  /// The entry at the upper corner, i.e. c(shape).
  const BigInt& answer() const { return table_.at(table_.cap()); }
  const BoxTable& box() const { return table_; }

 private:
  BoxTable table_;
};

/// prod(1 - x_i) * (1 - sum_{i=2}^d (i-1) e_i): the denominator of the
/// rational generating function of c.
SparsePoly gf_denominator(std::size_t d);

/// 1 - sum_{i=2}^d (i-1) e_i, whose reciprocal generates f.
SparsePoly mmt_denominator(std::size_t d);

/// Coefficient extraction from the telescoped product, truncated per
/// variable at m_i - 1.
BigInt count_direct(const Shape& shape);

/// f(k) by enumerating zero-diagonal d x d matrices with row and column sums
/// k, weighted by the product of row multinomials. Requires d >= 2.
BigInt f_contingency(const MultiIndex& k);

/// f(k) for all k <= cap by reciprocating mmt_denominator(d) in the
/// truncated power-series ring.
BoxTable f_series(std::size_t d, const MultiIndex& cap);

/// sum of f over the box 0 <= k <= m - 1.
BigInt count_box_sum(const Shape& shape);

/// Solves the constant-coefficient lattice recurrence implied by
/// gf_denominator over the full box 0 <= v <= shape.
CountTable count_lattice_dp(const Shape& shape);

/// C_d(1..nmax) from a lattice DP that stores only sorted multi-indices.
BigSequence diagonal(std::size_t d, std::int64_t nmax);

}  // namespace svt
