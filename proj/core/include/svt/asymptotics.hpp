#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svt/numeric.hpp"
#include "svt/sequence.hpp"

namespace svt {

/// Thrown when a sequence has zero or sign-changing terms.
class GrowthUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a(n) ~ alpha * mu^n * n^theta * (1 + sum_j corrections[j-1] n^-j).
struct AsymptoticModel {
  Real mu;
  Real theta;
  Real alpha;
  std::optional<Rational> mu_exact;
  std::optional<Rational> theta_exact;
  std::vector<Rational> corrections;
  /// Number of sequence terms an estimate was built from; 0 for stored models.
  std::size_t n_used = 0;
};

/// The stored expansion of C_3: mu = 8, theta = -1, alpha = 2/(sqrt(3) pi),
/// six rational corrections.
AsymptoticModel c3_asymptotic_model();

/// alpha mu^n n^theta (1 + sum_{j <= num_corrections} a_j n^-j).
Real eval_model(const AsymptoticModel& model, std::int64_t n, std::size_t num_corrections);

/// Richardson extrapolation of s(n0), ..., s(n0 + k) assuming
/// s(n) = s + c_1/n + ... + c_k/n^k + ...
Real richardson(std::span<const Real> values, std::int64_t first_index);

/// Stage count used by the estimators: min(6, available / 3).
std::size_t richardson_depth(std::size_t available);

/// Richardson-accelerated limit of a(n+1)/a(n) taken over the tail of a
/// rational orbit. `offset` is the index of values[0].
Real accelerated_ratio(std::span<const Rational> values, std::int64_t offset);

/// Numeric estimate of mu, theta, alpha for a one-signed sequence. With a
/// theta hint, theta is fixed exactly and mu is extrapolated from the
/// theta-corrected ratio.
AsymptoticModel estimate_growth(const BigSequence& seq,
                                const std::optional<Rational>& theta_hint = std::nullopt);

struct ConjectureReport {
  std::size_t d = 0;
  Real mu_conjectured;
  Real theta_conjectured;
  /// [a(N)/a(N-1)] * (N/(N-1))^((d-1)/2).
  Real corrected_ratio;
  Real deviation;
  std::optional<Real> mu_estimated;
  Real alpha_estimate;
  /// Relative change of the alpha estimate between the last two usable n.
  Real alpha_drift;
  std::size_t n_used = 0;
};

ConjectureReport check_conjecture(std::size_t d, const BigSequence& seq);

struct SubdominanceReport {
  BigInt perturbation;
  std::int64_t n = 0;
  Real raw_ratio_unperturbed;
  Real raw_ratio_perturbed;
  /// Richardson-accelerated limits of the ratio at n.
  Real ratio_unperturbed;
  Real ratio_perturbed;
};

/// Runs the C_3 recurrence from the printed seeds and from the same seeds
/// with perturbation added to the fifth term, up to index n.
SubdominanceReport subdominance_demo(const BigInt& perturbation, std::int64_t n = 300);

}  // namespace svt
