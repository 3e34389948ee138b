#include "svt/count.hpp"

#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

namespace svt {
namespace {

constexpr std::size_t kMaxBoxVolume = std::size_t{1} << 28;

/// Nonconstant terms of a polynomial with constant term 1.
std::vector<std::pair<MultiIndex, BigInt>> tail_terms(const SparsePoly& p) {
  std::vector<std::pair<MultiIndex, BigInt>> out;
  for (const auto& [e, c] : p.terms()) {
    if (e.total() != 0) out.emplace_back(e, c);
  }
  return out;
}

/// Advances v through the box in lexicographic order. Returns false after
/// the last point.
bool advance(MultiIndex& v, const MultiIndex& cap) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < cap[i]) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

MultiIndex minus_one(const MultiIndex& m) {
  MultiIndex out = m;
  for (auto& v : out) --v;
  return out;
}

/// Row-by-row enumeration of zero-diagonal matrices with prescribed row and
/// column sums.
class ContingencyEnumerator {
 public:
  explicit ContingencyEnumerator(const MultiIndex& k)
      : k_(k), d_(k.size()), col_left_(k.begin(), k.end()) {}

  BigInt run() {
    total_ = 0;
    row(0, BigInt(1));
    return total_;
  }

 private:
  void row(std::size_t i, const BigInt& weight) {
    if (i == d_) {
      total_ += weight;
      return;
    }
    // Residual column sums must still be reachable by the rows below,
    // excluding each column's own (diagonal) row.
    for (std::size_t j = 0; j < d_; ++j) {
      std::int64_t supply = 0;
      for (std::size_t r = i; r < d_; ++r) {
        if (r != j) supply += k_[r];
      }
      if (col_left_[j] > supply) return;
    }
    cell(i, 0, k_[i], weight);
  }

  void cell(std::size_t i, std::size_t j, std::int64_t left, const BigInt& weight) {
    if (j == i) ++j;
    if (j >= d_) {
      if (left == 0) row(i + 1, weight);
      return;
    }
    std::int64_t room = 0;
    for (std::size_t c = j; c < d_; ++c) {
      if (c != i) room += col_left_[c];
    }
    if (left > room) return;

    std::size_t next = j + 1 == i ? j + 2 : j + 1;
    const bool last = next >= d_;
    const std::int64_t lo = last ? left : 0;
    const std::int64_t hi = std::min<std::int64_t>(left, col_left_[j]);
    BigInt binom;
    for (std::int64_t a = lo; a <= hi; ++a) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(left),
                   static_cast<unsigned long>(a));
      col_left_[j] -= a;
      cell(i, j + 1, left - a, weight * binom);
      col_left_[j] += a;
    }
  }

  const MultiIndex& k_;
  std::size_t d_;
  std::vector<std::int64_t> col_left_;
  BigInt total_;
};

}  // namespace

Shape::Shape(MultiIndex dims) : dims_(std::move(dims)) { require_valid(dims_, "shape"); }

BoxTable::BoxTable(const MultiIndex& cap) : cap_(cap), strides_(cap.size()) {
  require_valid(cap, "box cap");
  std::size_t volume = 1;
  for (std::size_t i = cap.size(); i-- > 0;) {
    strides_[i] = volume;
    const auto extent = static_cast<std::size_t>(cap[i]) + 1;
    if (volume > kMaxBoxVolume / extent) {
      throw UsageError("box " + cap.str() + " is too large");
    }
    volume *= extent;
  }
  values_.assign(volume, BigInt(0));
}

bool BoxTable::contains(const MultiIndex& v) const {
  return v.size() == cap_.size() && v.nonnegative() && v.leq(cap_);
}

std::size_t BoxTable::offset(const MultiIndex& v) const {
  if (!contains(v)) throw UsageError("index " + v.str() + " outside box " + cap_.str());
  std::size_t off = 0;
  for (std::size_t i = 0; i < v.size(); ++i) off += strides_[i] * static_cast<std::size_t>(v[i]);
  return off;
}

MultiIndex BoxTable::index_of(std::size_t linear) const {
  MultiIndex v(cap_.size());
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    v[i] = static_cast<MultiIndex::value_type>(linear / strides_[i]);
    linear %= strides_[i];
  }
  return v;
}

const BigInt& BoxTable::at(const MultiIndex& v) const { return values_[offset(v)]; }
BigInt& BoxTable::at(const MultiIndex& v) { return values_[offset(v)]; }

CountTable::CountTable(BoxTable values) : table_(std::move(values)) {}

SparsePoly mmt_denominator(std::size_t d) {
  if (d < 1) throw UsageError("mmt_denominator: d must be >= 1");
  SparsePoly out = SparsePoly::constant(d, 1);
  for (std::size_t i = 2; i <= d; ++i) {
    out = out - poly_scale(elementary_symmetric(d, i), static_cast<unsigned long>(i - 1));
  }
  return out;
}

SparsePoly gf_denominator(std::size_t d) {
  SparsePoly out = mmt_denominator(d);
  for (std::size_t i = 0; i < d; ++i) {
    out = out * (SparsePoly::constant(d, 1) - SparsePoly::variable(d, i));
  }
  return out;
}

BigInt count_direct(const Shape& shape) {
  if (shape.degenerate()) return 0;
  const std::size_t d = shape.order();
  const MultiIndex cap = minus_one(shape.dims());

  SparsePoly product = SparsePoly::constant(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    // that_i = (sum_j t_j) - t_i
    SparsePoly hat(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) hat = hat + SparsePoly::variable(d, j);
    }
    // sum_{k < m_i} that_i^k t_i^(m_i - 1 - k). that_i never involves t_i, so
    // shifting by t_i^(m_i-1-k) stays inside the cap.
    SparsePoly factor(d);
    SparsePoly power = SparsePoly::constant(d, 1);
    for (std::int32_t k = 0; k <= cap[i]; ++k) {
      for (const auto& [e, c] : power.terms()) {
        MultiIndex shifted = e;
        shifted[i] = cap[i] - k;
        factor.add_term(shifted, c);
      }
      if (k < cap[i]) power = poly_mul_truncated(power, hat, cap);
    }
    product = poly_mul_truncated(product, factor, cap);
  }
  return product.coefficient(cap);
}

BigInt f_contingency(const MultiIndex& k) {
  require_valid(k, "f_contingency");
  if (k.size() < 2) throw UsageError("f_contingency: d must be >= 2");
  return ContingencyEnumerator(k).run();
}

BoxTable f_series(std::size_t d, const MultiIndex& cap) {
  if (cap.size() != d) throw UsageError("f_series: cap has wrong dimension");
  BoxTable table(cap);
  const auto tail = tail_terms(mmt_denominator(d));

  MultiIndex v(d);
  std::size_t linear = 0;
  do {
    BigInt acc = linear == 0 ? BigInt(1) : BigInt(0);
    for (const auto& [u, q] : tail) {
      if (!u.leq(v)) continue;
      const std::size_t back = table.offset(u);
      mpz_submul(acc.get_mpz_t(), q.get_mpz_t(), table.values()[linear - back].get_mpz_t());
    }
    table.values()[linear] = std::move(acc);
    ++linear;
  } while (advance(v, cap));
  return table;
}

BigInt count_box_sum(const Shape& shape) {
  if (shape.degenerate()) return 0;
  const BoxTable f = f_series(shape.order(), minus_one(shape.dims()));
  BigInt sum = 0;
  for (const auto& value : f.values()) sum += value;
  return sum;
}

CountTable count_lattice_dp(const Shape& shape) {
  const std::size_t d = shape.order();
  const MultiIndex& cap = shape.dims();
  BoxTable table(cap);
  const auto tail = tail_terms(gf_denominator(d));
  const MultiIndex ones(d, 1);

  // v - u is lexicographically below v for every u != 0 in the support, so
  // a single lexicographic sweep sees all dependencies already filled.
  MultiIndex v(d);
  std::size_t linear = 0;
  do {
    BigInt acc = v == ones ? BigInt(1) : BigInt(0);
    for (const auto& [u, coeff] : tail) {
      if (!u.leq(v)) continue;
      const std::size_t back = table.offset(u);
      mpz_submul(acc.get_mpz_t(), coeff.get_mpz_t(), table.values()[linear - back].get_mpz_t());
    }
    table.values()[linear] = std::move(acc);
    ++linear;
  } while (advance(v, cap));
  return CountTable(std::move(table));
}

BigSequence diagonal(std::size_t d, std::int64_t nmax) {
  if (d < 2) throw UsageError("diagonal: d must be >= 2");
  if (nmax < 1) throw UsageError("diagonal: nmax must be >= 1");
  if (nmax > std::numeric_limits<MultiIndex::value_type>::max() / 4) {
    throw UsageError("diagonal: nmax too large");
  }
  const auto n = static_cast<MultiIndex::value_type>(nmax);
  const auto tail = tail_terms(gf_denominator(d));
  const MultiIndex ones(d, 1);

  // Sorted tuples 0 <= s_1 <= ... <= s_d <= n in lexicographic order.
  std::vector<MultiIndex> points;
  {
    MultiIndex s(d);
    while (true) {
      points.push_back(s);
      std::size_t i = d;
      while (i-- > 0 && s[i] == n) {
      }
      if (i >= d) break;
      const auto next = s[i] + 1;
      for (std::size_t j = i; j < d; ++j) s[j] = next;
    }
  }

  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> rank;
  rank.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) rank.emplace(points[i], i);

  std::vector<BigInt> values(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const MultiIndex& s = points[p];
    BigInt acc = s == ones ? BigInt(1) : BigInt(0);
    for (const auto& [u, coeff] : tail) {
      if (!u.leq(s)) continue;
      MultiIndex w(d);
      for (std::size_t i = 0; i < d; ++i) w[i] = s[i] - u[i];
      const std::size_t q = rank.at(w.sorted());
      mpz_submul(acc.get_mpz_t(), coeff.get_mpz_t(), values[q].get_mpz_t());
    }
    values[p] = std::move(acc);
  }

  std::vector<BigInt> terms;
  terms.reserve(static_cast<std::size_t>(nmax));
  for (MultiIndex::value_type k = 1; k <= n; ++k) {
    terms.push_back(values[rank.at(MultiIndex(d, k))]);
  }
  return BigSequence(1, std::move(terms));
}

}  // namespace svt
