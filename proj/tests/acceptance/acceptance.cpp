// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "golden.hpp"
#include "svt/asymptotics.hpp"
#include "svt/count.hpp"
#include "svt/holonomic.hpp"

namespace {

using namespace svt;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const Real& r) { return format_real(r, 8); }

const BigSequence kC3Seed(1, {1, 6, 37, 240, 1621});

BigSequence c3_exact(std::int64_t upto) { return extend(c3_recurrence(), kC3Seed, upto); }

Outcome golden_terms() {
  Outcome o;
  const std::vector<std::pair<std::size_t, double>> limits = {{3, 1}, {4, 30}, {5, 120}, {6, 120}};
  for (const auto& [d, limit] : limits) {
    const BigSequence& expected = cli::golden(d);
    const auto start = Clock::now();
    const BigSequence computed = diagonal(d, expected.last_index());
    const double t = seconds_since(start);
    o.require(computed == expected, "C" + std::to_string(d) + " terms differ");
    o.require(t < limit, "C" + std::to_string(d) + " took " + std::to_string(t) + " s");
  }
  o.require(c3_exact(24) == cli::golden(3), "C3 recurrence route differs");
  o.require(cli::golden(3).terms().back() == BigInt("63203453697218605440"), "C3 tail");
  o.require(cli::golden(4).terms().back() == BigInt("206267049696409355312012281872181"),
            "C4 tail");
  o.require(cli::golden(5).terms().back() == BigInt("5582882474985676800"), "C5 tail");
  o.require(cli::golden(6).terms().back() == BigInt("1435747717722810960"), "C6 tail");

  std::ostringstream out, err;
  o.require(cli::verify_golden(cli::golden_tables(), out, err) == cli::kOk, "verify failed");
  o.require(out.str() == "C3: 24/24 OK; C4: 19/19 OK; C5: 8/8 OK; C6: 6/6 OK\n",
            "verify summary: " + out.str());
  return o;
}

Outcome three_way() {
  Outcome o;
  auto check = [&](const MultiIndex& m) {
    const Shape s(m);
    const BigInt direct = count_direct(s);
    const BigInt box = count_box_sum(s);
    const BigInt lattice = count_lattice_dp(s).answer();
    if (direct != box || box != lattice) o.require(false, "disagreement at " + m.str());
  };
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) check({a, b, c});
    }
  }
  std::mt19937 rng(271905);
  int shapes = 0;
  while (shapes < 50) {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const int top = d <= 2 ? 64 : d == 3 ? 16 : d == 4 ? 8 : 5;
    MultiIndex m(d);
    long volume = 1;
    for (auto& v : m) {
      v = std::uniform_int_distribution<int>(1, top)(rng);
      volume *= v;
    }
    if (volume > 4096) continue;
    check(m);
    ++shapes;
  }
  return o;
}

Outcome f_oracles() {
  Outcome o;
  for (const auto& [d, bound] : std::vector<std::pair<std::size_t, int>>{{3, 10}, {4, 8}}) {
    const BoxTable table = f_series(d, MultiIndex(d, bound));
    for (std::size_t i = 0; i < table.volume(); ++i) {
      const MultiIndex k = table.index_of(i);
      if (k.total() > bound) continue;
      if (table.values()[i] != f_contingency(k)) o.require(false, "f differs at " + k.str());
    }
  }
  return o;
}

Outcome stored_recurrence_check() {
  Outcome o;
  const PolyRecurrence rec = c3_recurrence();
  const BigSequence& c3 = cli::golden(3);
  for (std::int64_t n = 1; n + 5 <= 24; ++n) {
    if (residual(rec, c3, n) != 0) o.require(false, "window n=" + std::to_string(n));
  }
  o.require(extend(rec, kC3Seed, 24) == c3, "extension from 5 seeds differs");
  return o;
}

Outcome rediscovery() {
  Outcome o;
  const BigSequence by_dp = diagonal(3, 60);
  const BigSequence by_rec = c3_exact(60);
  o.require(by_dp == by_rec, "DP and recurrence disagree on C3(1..60)");
  const auto guessed = guess_recurrence(by_dp, 5, 7);
  o.require(guessed.has_value(), "no recurrence found");
  if (guessed) o.require(*guessed == c3_recurrence(), "guessed recurrence differs");
  return o;
}

Outcome c3_series_check() {
  Outcome o;
  const BigSequence c3 = c3_exact(200);
  const AsymptoticModel m = c3_asymptotic_model();
  const auto err = [&](std::int64_t n) {
    return abs(eval_model(m, n, 6) - to_real(c3.at(n))) / to_real(c3.at(n));
  };
  const Real e100 = err(100), e200 = err(200);
  o.require(e100 < Real("1e-3"), "n=100 error " + str(e100));
  o.require(e200 < Real("1e-4"), "n=200 error " + str(e200));
  o.require(e200 < e100, "error did not decrease");
  o.detail = o.pass ? "err(100)=" + str(e100) + " err(200)=" + str(e200) : o.detail;
  return o;
}

Outcome growth_recovery() {
  Outcome o;
  const AsymptoticModel est = estimate_growth(c3_exact(200));
  const Real alpha = c3_asymptotic_model().alpha;
  o.require(abs(est.mu - 8) < Real("1e-4"), "mu " + str(est.mu));
  o.require(est.theta >= Real("-1.02") && est.theta <= Real("-0.98"), "theta " + str(est.theta));
  o.require(abs(est.alpha - alpha) < Real("1e-3"), "alpha " + str(est.alpha));
  if (o.pass) {
    o.detail = "mu=" + str(est.mu) + " theta=" + str(est.theta) + " alpha=" + str(est.alpha);
  }
  return o;
}

Outcome subdominance() {
  Outcome o;
  const SubdominanceReport r = subdominance_demo(1, 300);
  o.require(abs(r.ratio_unperturbed - 8) < Real("1e-3"), "unperturbed " + str(r.ratio_unperturbed));
  o.require(abs(r.ratio_perturbed - 9) < Real("1e-2"), "perturbed " + str(r.ratio_perturbed));
  if (o.pass) {
    o.detail = "ratios " + str(r.ratio_unperturbed) + " / " + str(r.ratio_perturbed);
  }
  return o;
}

Outcome conjecture() {
  Outcome o;
  const std::vector<std::pair<std::size_t, double>> limits = {{4, 0.02}, {5, 0.03}, {6, 0.07}};
  std::string summary;
  for (const auto& [d, limit] : limits) {
    const ConjectureReport r = check_conjecture(d, cli::golden(d));
    o.require(r.deviation < Real(limit), "d=" + std::to_string(d) + " deviation " + str(r.deviation));
    summary += (summary.empty() ? "" : " ") + ("d" + std::to_string(d) + "=" + str(r.deviation));
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome negative_guess() {
  Outcome o;
  const auto rec = guess_recurrence(cli::golden(4), 6, 6);
  o.require(!rec.has_value(), "spurious recurrence accepted");
  return o;
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "golden-term reproduction", 271, golden_terms},
      {"AC2", "three-way method equivalence", 60, three_way},
      {"AC3", "f-oracle equivalence", 60, f_oracles},
      {"AC4", "stored C3 recurrence verification", 1, stored_recurrence_check},
      {"AC5", "recurrence re-discovery", 120, rediscovery},
      {"AC6", "C3 asymptotic series validation", 10, c3_series_check},
      {"AC7", "growth-constant recovery", 10, growth_recovery},
      {"AC8", "sub-dominance demonstration", 10, subdominance},
      {"AC9", "conjecture consistency", 10, conjecture},
      {"AC10", "negative guessing control", 60, negative_guess},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    if (t > c.budget_seconds) {
      o.require(false, "over time budget");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", t);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << " (" << timing
              << ')' << (o.detail.empty() ? "" : ": " + o.detail) << '\n';
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
