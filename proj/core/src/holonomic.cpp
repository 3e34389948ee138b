#include "svt/holonomic.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace svt {
namespace {

using Poly1 = std::vector<BigInt>;  // ascending coefficients in n

Poly1 poly1(std::initializer_list<long> ascending) {
  Poly1 out;
  for (long c : ascending) out.emplace_back(c);
  return out;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  Poly1 out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly1 scale(Poly1 p, long c) {
  for (auto& v : p) v *= c;
  return p;
}

BigInt content(const std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(std::vector<BigInt>& row) {
  const BigInt g = content(row);
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t bits = 0;
  for (const auto& x : v) bits = std::max(bits, bit_length(x));
  return bits;
}

void require_seed(const PolyRecurrence& rec, std::size_t seed_size) {
  if (seed_size < rec.order()) {
    throw UsageError("seed has " + std::to_string(seed_size) +
                     " terms, recurrence needs " + std::to_string(rec.order()));
  }
}

}  // namespace

PolyRecurrence::PolyRecurrence(std::vector<std::vector<BigInt>> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw UsageError("recurrence order must be >= 1");
  const std::size_t width = coeffs_.front().size();
  if (width == 0) throw UsageError("recurrence degree must be >= 0");
  for (const auto& row : coeffs_) {
    if (row.size() != width) throw UsageError("ragged recurrence coefficient matrix");
  }
  if (std::all_of(coeffs_.back().begin(), coeffs_.back().end(),
                  [](const BigInt& v) { return v == 0; })) {
    throw UsageError("leading coefficient polynomial is zero");
  }
}

BigInt PolyRecurrence::eval(std::size_t j, std::int64_t n) const {
  const auto& p = coeffs_.at(j);
  const BigInt x = static_cast<long>(n);
  BigInt acc = 0;
  for (std::size_t e = p.size(); e-- > 0;) {
    acc *= x;
    acc += p[e];
  }
  return acc;
}

PolyRecurrence PolyRecurrence::canonical() const {
  auto rows = coeffs_;
  std::size_t width = rows.front().size();
  while (width > 1 && std::all_of(rows.begin(), rows.end(),
                                  [&](const auto& row) { return row[width - 1] == 0; })) {
    --width;
  }
  for (auto& row : rows) row.resize(width);

  BigInt g = 0;
  for (const auto& row : rows) {
    const BigInt c = content(row);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  const auto& lead_row = rows.back();
  auto lead = std::find_if(lead_row.rbegin(), lead_row.rend(),
                           [](const BigInt& v) { return v != 0; });
  if (*lead < 0) g = -g;
  for (auto& row : rows) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return PolyRecurrence(std::move(rows));
}

PolyRecurrence c3_recurrence() {
  const Poly1 q0 = poly1({22100, 29474, 14447, 3094, 245});
  const Poly1 q5 = poly1({4224, 8882, 6635, 2114, 245});
  const Poly1 n1 = poly1({1, 1}), n2 = poly1({2, 1}), n3 = poly1({3, 1});
  const Poly1 n4 = poly1({4, 1}), n5 = poly1({5, 1});

  std::vector<Poly1> p(6);
  p[0] = scale(mul(mul(mul(n2, q0), n1), n1), 72);
  p[1] = scale(mul(n2, poly1({2639760, 8425060, 10263446, 6230951, 2012733, 330981, 21805})), -1);
  p[2] = poly1({-10279296, -29331496, -35069178, -22847777, -8785333, -1998705, -249641, -13230});
  p[3] = poly1({16026528, 47273504, 57777574, 38132651, 14735333, 3343917, 413637, 21560});
  p[4] = scale(mul(n4, poly1({975888, 2601986, 2769127, 1516515, 452903, 70147, 4410})), -1);
  p[5] = mul(mul(mul(n5, n4), n3), q5);
  return PolyRecurrence(std::move(p)).canonical();
}

PolyRecurrence shift_recurrence(const PolyRecurrence& rec, std::int64_t shift) {
  const BigInt s = static_cast<long>(shift);
  std::vector<std::vector<BigInt>> out;
  for (const auto& p : rec.coeffs()) {
    // Horner in (n + s).
    Poly1 acc{BigInt(0)};
    const Poly1 lin{s, BigInt(1)};
    for (std::size_t e = p.size(); e-- > 0;) {
      acc = mul(acc, lin);
      acc[0] += p[e];
    }
    acc.resize(p.size());
    out.push_back(std::move(acc));
  }
  return PolyRecurrence(std::move(out));
}

BigInt residual(const PolyRecurrence& rec, const BigSequence& seq, std::int64_t n) {
  BigInt acc = 0;
  for (std::size_t j = 0; j <= rec.order(); ++j) {
    acc += rec.eval(j, n) * seq.at(n + static_cast<std::int64_t>(j));
  }
  return acc;
}

BigSequence extend(const PolyRecurrence& rec, const BigSequence& seed, std::int64_t upto) {
  require_seed(rec, seed.size());
  BigSequence out = seed;
  const auto r = static_cast<std::int64_t>(rec.order());
  BigInt lead, acc;
  while (out.last_index() < upto) {
    const std::int64_t n = out.last_index() + 1 - r;
    lead = rec.eval(rec.order(), n);
    if (lead == 0) {
      throw ArithmeticError("leading-coefficient singularity at n = " + std::to_string(n));
    }
    acc = 0;
    for (std::int64_t j = 0; j < r; ++j) {
      acc += rec.eval(static_cast<std::size_t>(j), n) * out.at(n + j);
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
      throw ArithmeticError("recurrence does not preserve integrality at n = " +
                            std::to_string(n + r));
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    out.push_back(-acc);
  }
  return out;
}

std::vector<Rational> extend_rational(const PolyRecurrence& rec, std::int64_t offset,
                                      std::vector<Rational> seed, std::int64_t upto) {
  require_seed(rec, seed.size());
  const auto r = static_cast<std::int64_t>(rec.order());
  while (offset + static_cast<std::int64_t>(seed.size()) - 1 < upto) {
    const std::int64_t n = offset + static_cast<std::int64_t>(seed.size()) - r;
    const BigInt lead = rec.eval(rec.order(), n);
    if (lead == 0) {
      throw ArithmeticError("leading-coefficient singularity at n = " + std::to_string(n));
    }
    Rational acc = 0;
    for (std::int64_t j = 0; j < r; ++j) {
      acc += Rational(rec.eval(static_cast<std::size_t>(j), n)) *
             seed[static_cast<std::size_t>(n - offset + j)];
    }
    Rational next = -acc / Rational(lead);
    next.canonicalize();
    seed.push_back(std::move(next));
  }
  return seed;
}

bool verify(const PolyRecurrence& rec, const BigSequence& seq) {
  if (seq.size() < rec.order() + 1) {
    throw UsageError("verify: sequence shorter than order + 1");
  }
  const auto r = static_cast<std::int64_t>(rec.order());
  for (std::int64_t n = seq.offset(); n + r <= seq.last_index(); ++n) {
    if (residual(rec, seq, n) != 0) return false;
  }
  return true;
}

std::vector<std::vector<BigInt>> integer_nullspace(std::vector<std::vector<BigInt>> rows,
                                                   std::size_t cols) {
  for (const auto& row : rows) {
    if (row.size() != cols) throw UsageError("integer_nullspace: ragged matrix");
  }
  std::vector<std::size_t> pivot_col;
  std::vector<char> is_pivot(cols, 0);
  std::size_t rank = 0;
  BigInt g, a, b;

  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (best == rows.size() || bit_length(rows[i][c]) < bit_length(rows[best][c])) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const auto& pivot = rows[rank];

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), pivot[c].get_mpz_t(), rows[i][c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), pivot[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), rows[i][c].get_mpz_t(), g.get_mpz_t());
      auto& row = rows[i];
      for (std::size_t k = 0; k < cols; ++k) {
        row[k] *= a;
        mpz_submul(row[k].get_mpz_t(), b.get_mpz_t(), pivot[k].get_mpz_t());
      }
      divide_content(row);
    }
    pivot_col.push_back(c);
    is_pivot[c] = 1;
    ++rank;
  }

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BigInt lcm = 1;
    for (std::size_t k = 0; k < rank; ++k) {
      if (rows[k][f] != 0) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rows[k][pivot_col[k]].get_mpz_t());
      }
    }
    std::vector<BigInt> x(cols, BigInt(0));
    x[f] = abs(lcm);
    for (std::size_t k = 0; k < rank; ++k) {
      if (rows[k][f] == 0) continue;
      BigInt q;
      mpz_divexact(q.get_mpz_t(), x[f].get_mpz_t(), rows[k][pivot_col[k]].get_mpz_t());
      x[pivot_col[k]] = -rows[k][f] * q;
    }
    divide_content(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<PolyRecurrence> guess_recurrence(const BigSequence& seq, std::size_t max_order,
                                               std::size_t max_degree,
                                               const GuessOptions& options) {
  const std::size_t terms = seq.size();
  bool any_feasible = false;

  for (std::size_t r = 1; r <= max_order; ++r) {
    if (terms <= r) break;
    const std::size_t windows = terms - r;
    for (std::size_t deg = 0; deg <= max_degree; ++deg) {
      const std::size_t width = deg + 1;
      const std::size_t unknowns = (r + 1) * width;
      const std::size_t used = unknowns + options.margin;
      if (windows < used) break;  // higher degrees need even more
      any_feasible = true;

      std::vector<std::vector<BigInt>> rows;
      rows.reserve(used);
      for (std::size_t w = 0; w < used; ++w) {
        const std::int64_t n = seq.offset() + static_cast<std::int64_t>(w);
        std::vector<BigInt> row(unknowns);
        const BigInt nn = static_cast<long>(n);
        for (std::size_t j = 0; j <= r; ++j) {
          BigInt term = seq.at(n + static_cast<std::int64_t>(j));
          for (std::size_t e = 0; e < width; ++e) {
            row[j * width + e] = term;
            term *= nn;
          }
        }
        rows.push_back(std::move(row));
      }

      auto basis = integer_nullspace(std::move(rows), unknowns);
      const std::vector<BigInt>* chosen = nullptr;
      for (const auto& v : basis) {
        const bool genuine = std::any_of(v.begin() + static_cast<std::ptrdiff_t>(r * width),
                                         v.end(), [](const BigInt& x) { return x != 0; });
        if (!genuine) continue;
        if (!chosen || max_bits(v) < max_bits(*chosen)) chosen = &v;
      }
      if (!chosen) continue;

      std::vector<std::vector<BigInt>> coeffs(r + 1);
      for (std::size_t j = 0; j <= r; ++j) {
        coeffs[j].assign(chosen->begin() + static_cast<std::ptrdiff_t>(j * width),
                         chosen->begin() + static_cast<std::ptrdiff_t>((j + 1) * width));
      }
      PolyRecurrence candidate = PolyRecurrence(std::move(coeffs)).canonical();
      if (verify(candidate, seq)) return candidate;
    }
  }
  if (!any_feasible) {
    throw InsufficientData("insufficient data: " + std::to_string(terms) +
                           " terms cannot support any candidate with margin " +
                           std::to_string(options.margin));
  }
  return std::nullopt;
}

}  // namespace svt
