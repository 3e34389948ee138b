#include "svt/sparse_poly.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

namespace svt {
namespace {

void require_same_dim(const SparsePoly& a, const SparsePoly& b) {
  if (a.dim() != b.dim()) {
    throw UsageError("polynomial dimension mismatch: " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
}

void require_dim(const SparsePoly& p, const MultiIndex& m) {
  if (m.size() != p.dim()) {
    throw UsageError("multi-index " + m.str() + " does not match dimension " +
                     std::to_string(p.dim()));
  }
}

}  // namespace

SparsePoly::SparsePoly(std::size_t dim) : dim_(dim) {
  if (dim > kMaxDim) throw UsageError("dimension exceeds kMaxDim");
}

SparsePoly SparsePoly::constant(std::size_t dim, const BigInt& c) {
  SparsePoly p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

SparsePoly SparsePoly::monomial(const MultiIndex& exponents, const BigInt& c) {
  SparsePoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t dim, std::size_t i) {
  if (i >= dim) throw UsageError("variable index out of range");
  MultiIndex e(dim);
  e[i] = 1;
  return monomial(e);
}

void SparsePoly::add_term(const MultiIndex& exponents, const BigInt& c) {
  require_dim(*this, exponents);
  if (!exponents.nonnegative()) throw UsageError("negative exponent " + exponents.str());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SparsePoly::coefficient(const MultiIndex& exponents) const {
  require_dim(*this, exponents);
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
  require_same_dim(a, b);
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

SparsePoly poly_negate(const SparsePoly& p) { return poly_scale(p, -1); }

SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b) {
  return poly_add(a, poly_negate(b));
}

SparsePoly poly_scale(const SparsePoly& p, const BigInt& c) {
  SparsePoly out(p.dim());
  if (c == 0) return out;
  for (const auto& [e, v] : p.terms()) out.add_term(e, v * c);
  return out;
}

SparsePoly poly_mul_truncated(const SparsePoly& a, const SparsePoly& b,
                              const std::optional<MultiIndex>& cap) {
  require_same_dim(a, b);
  if (cap) require_dim(a, *cap);
  const std::size_t d = a.dim();

  std::unordered_map<MultiIndex, BigInt, MultiIndexHash> acc;
  acc.reserve(a.size() + b.size());
  for (const auto& [ea, ca] : a.terms()) {
    if (cap && !ea.leq(*cap)) continue;
    for (const auto& [eb, cb] : b.terms()) {
      MultiIndex e(d);
      bool keep = true;
      for (std::size_t i = 0; i < d; ++i) {
        e[i] = ea[i] + eb[i];
        if (cap && e[i] > (*cap)[i]) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      BigInt& slot = acc[e];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }

  SparsePoly out(d);
  for (auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

SparsePoly elementary_symmetric(std::size_t d, std::size_t i) {
  if (i > d) {
    throw UsageError("elementary_symmetric: degree " + std::to_string(i) +
                     " exceeds dimension " + std::to_string(d));
  }
  SparsePoly out(d);
  // Walk all 0/1 vectors of weight i via a selection mask, lexicographically.
  std::vector<bool> mask(d, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(i), mask.end(), true);
  do {
    MultiIndex e(d);
    for (std::size_t k = 0; k < d; ++k) e[k] = mask[k] ? 1 : 0;
    out.add_term(e, 1);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

BigInt coefficient(const SparsePoly& p, const MultiIndex& idx) {
  return p.coefficient(idx);
}

void write_text(std::ostream& os, const SparsePoly& p) {
  for (const auto& [e, c] : p.terms()) {
    os << c.get_str();
    for (auto v : e) os << ' ' << v;
    os << '\n';
  }
}

std::string to_text(const SparsePoly& p) {
  std::ostringstream os;
  write_text(os, p);
  return os.str();
}

}  // namespace svt
