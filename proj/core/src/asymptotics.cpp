#include "svt/asymptotics.hpp"

#include <algorithm>
#include <string>

#include "svt/holonomic.hpp"

namespace svt {
namespace {

Real factorial(std::size_t k) {
  Real out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= static_cast<long>(i);
  return out;
}

Real pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

/// Richardson over the last depth+1 entries of `values`, whose first entry
/// sits at index `offset`.
Real richardson_tail(const std::vector<Real>& values, std::int64_t offset, std::size_t depth) {
  const std::size_t start = values.size() - depth - 1;
  return richardson(std::span<const Real>(values).subspan(start),
                    offset + static_cast<std::int64_t>(start));
}

int require_one_signed(const BigSequence& seq) {
  const int sign = sgn(seq.terms().front());
  for (const auto& v : seq.terms()) {
    if (v == 0) throw GrowthUndefined("growth estimation undefined: zero term");
    if (sgn(v) != sign) throw GrowthUndefined("growth estimation undefined: sign change");
  }
  return sign;
}

}  // namespace

AsymptoticModel c3_asymptotic_model() {
  AsymptoticModel m;
  m.mu = 8;
  m.theta = -1;
  m.mu_exact = Rational(8);
  m.theta_exact = Rational(-1);
  m.alpha = Real(2) / (sqrt(Real(3)) * pi());
  m.corrections = {Rational(-13, 3),           Rational(1477, 27),
                   Rational(-93707, 81),       Rational(8343061, 243),
                   Rational(-2866730137L, 2187)};
  m.corrections.emplace_back(BigInt("1204239422533"), BigInt(19683));
  for (auto& c : m.corrections) c.canonicalize();
  return m;
}

Real eval_model(const AsymptoticModel& model, std::int64_t n, std::size_t num_corrections) {
  if (n < 1) throw UsageError("eval_model: n must be >= 1");
  if (num_corrections > model.corrections.size()) {
    throw UsageError("eval_model: only " + std::to_string(model.corrections.size()) +
                     " corrections available");
  }
  const Real x = static_cast<long>(n);
  Real series = 1;
  Real inv_power = 1;
  for (std::size_t j = 0; j < num_corrections; ++j) {
    inv_power /= x;
    series += to_real(model.corrections[j]) * inv_power;
  }
  return model.alpha * pow(model.mu, x) * pow(x, model.theta) * series;
}

Real richardson(std::span<const Real> values, std::int64_t first_index) {
  if (values.empty()) throw UsageError("richardson: no values");
  const std::size_t k = values.size() - 1;
  Real acc = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    const Real n = static_cast<long>(first_index + static_cast<std::int64_t>(j));
    Real term = values[j] * pow(n, static_cast<long>(k)) / (factorial(j) * factorial(k - j));
    if ((k + j) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

std::size_t richardson_depth(std::size_t available) {
  return std::min<std::size_t>(6, available / 3);
}

Real accelerated_ratio(std::span<const Rational> values, std::int64_t offset) {
  if (values.size() < 2) throw InsufficientData("accelerated_ratio: need two terms");
  const std::size_t count = values.size() - 1;
  const std::size_t depth = richardson_depth(count);
  std::vector<Real> ratios;
  ratios.reserve(depth + 1);
  const std::size_t start = count - depth - 1;
  for (std::size_t i = start; i < count; ++i) {
    ratios.push_back(to_real(Rational(values[i + 1] / values[i])));
  }
  return richardson(ratios, offset + static_cast<std::int64_t>(start));
}

AsymptoticModel estimate_growth(const BigSequence& seq, const std::optional<Rational>& theta_hint) {
  if (seq.size() < 4) throw InsufficientData("estimate_growth: need at least 4 terms");
  const int sign = require_one_signed(seq);

  const std::int64_t first = seq.offset();
  std::vector<Real> logs;
  logs.reserve(seq.size());
  for (const auto& v : seq.terms()) logs.push_back(log_abs(v));

  // r(n) = a(n+1)/a(n) for n = first .. last-1.
  const std::size_t count = seq.size() - 1;
  std::vector<Real> ratios(count);
  for (std::size_t i = 0; i < count; ++i) ratios[i] = exp(logs[i + 1] - logs[i]);
  const std::size_t depth = richardson_depth(count);

  AsymptoticModel model;
  model.n_used = seq.size();

  if (theta_hint) {
    const Real theta = to_real(*theta_hint);
    std::vector<Real> corrected(count);
    for (std::size_t i = 0; i < count; ++i) {
      const Real n = static_cast<long>(first + static_cast<std::int64_t>(i));
      corrected[i] = ratios[i] * pow((n + 1) / n, -theta);
    }
    model.mu = richardson_tail(corrected, first, depth);
    model.theta = theta;
    model.theta_exact = *theta_hint;
  } else {
    model.mu = richardson_tail(ratios, first, depth);
    const Real log_mu = log(model.mu);
    // log r(n) - log mu = theta log(1 + 1/n) + O(1/n^2).
    std::vector<Real> slopes(count);
    for (std::size_t i = 0; i < count; ++i) {
      const Real n = static_cast<long>(first + static_cast<std::int64_t>(i));
      slopes[i] = (logs[i + 1] - logs[i] - log_mu) / log1p(1 / n);
    }
    model.theta = richardson_tail(slopes, first, depth);
  }

  const Real log_mu = log(model.mu);
  std::vector<Real> scaled(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Real n = static_cast<long>(first + static_cast<std::int64_t>(i));
    scaled[i] = exp(logs[i] - n * log_mu - model.theta * log(n));
    if (sign < 0) scaled[i] = -scaled[i];
  }
  model.alpha = richardson_tail(scaled, first, richardson_depth(seq.size()));
  return model;
}

ConjectureReport check_conjecture(std::size_t d, const BigSequence& seq) {
  if (d < 3) throw UsageError("check_conjecture: d must be >= 3");
  if (seq.size() < 3) throw InsufficientData("insufficient data: need at least 3 terms");
  require_one_signed(seq);

  ConjectureReport report;
  report.d = d;
  report.n_used = seq.size();
  report.mu_conjectured = pow(Real(static_cast<long>(d - 1)), static_cast<long>(d));
  report.theta_conjectured = -Real(static_cast<long>(d - 1)) / 2;

  const std::int64_t last = seq.last_index();
  const Real big_n = static_cast<long>(last);
  report.corrected_ratio = to_real(seq.at(last)) / to_real(seq.at(last - 1)) *
                           pow(big_n / (big_n - 1), -report.theta_conjectured);
  report.deviation = abs(report.corrected_ratio - report.mu_conjectured) / report.mu_conjectured;

  const Rational theta_exact(-static_cast<long>(d - 1), 2);
  if (seq.size() >= 6) report.mu_estimated = estimate_growth(seq, theta_exact).mu;

  // alpha_d from a(n) / (mu*^n n^theta*), accelerated; drift compares the
  // windows ending at N and N-1.
  const Real log_mu = log(report.mu_conjectured);
  std::vector<Real> scaled(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Real n = static_cast<long>(seq.offset() + static_cast<std::int64_t>(i));
    scaled[i] = exp(log_abs(seq.terms()[i]) - n * log_mu - report.theta_conjectured * log(n));
  }
  const std::size_t depth = richardson_depth(seq.size() - 1);
  report.alpha_estimate = richardson_tail(scaled, seq.offset(), depth);
  std::vector<Real> head(scaled.begin(), scaled.end() - 1);
  const Real previous = richardson_tail(head, seq.offset(), depth);
  report.alpha_drift = abs(report.alpha_estimate - previous) / abs(report.alpha_estimate);
  return report;
}

SubdominanceReport subdominance_demo(const BigInt& perturbation, std::int64_t n) {
  if (perturbation == 0) throw UsageError("subdominance_demo: perturbation must be nonzero");
  if (n < 12) throw UsageError("subdominance_demo: n must be >= 12");
  const PolyRecurrence rec = c3_recurrence();
  std::vector<Rational> seed{Rational(1), Rational(6), Rational(37), Rational(240),
                             Rational(1621)};
  std::vector<Rational> perturbed = seed;
  perturbed.back() += Rational(perturbation);

  const auto plain = extend_rational(rec, 1, seed, n + 1);
  const auto bent = extend_rational(rec, 1, perturbed, n + 1);

  SubdominanceReport report;
  report.perturbation = perturbation;
  report.n = n;
  const auto tail = [n](const std::vector<Rational>& orbit) {
    return to_real(Rational(orbit[static_cast<std::size_t>(n)] /
                            orbit[static_cast<std::size_t>(n - 1)]));
  };
  report.raw_ratio_unperturbed = tail(plain);
  report.raw_ratio_perturbed = tail(bent);
  report.ratio_unperturbed = accelerated_ratio(plain, 1);
  report.ratio_perturbed = accelerated_ratio(bent, 1);
  return report;
}

}  // namespace svt
