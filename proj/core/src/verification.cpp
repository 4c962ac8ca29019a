// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <utility>

#include "tonks/cluster.hpp"
#include "tonks/exact_eval.hpp"
#include "tonks/inverse_maps.hpp"
#include "tonks/rational.hpp"
#include "tonks/shearer.hpp"
#include "tonks/tree_series.hpp"

namespace tonks::verification {
namespace {

using Clock = std::chrono::steady_clock;

const double kInvE = std::exp(-1.0);

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

CheckResult make(int id, std::string name) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

CheckResult discrete_singularity(const VerifyOptions&) {
  auto r = make(1, "discrete singularity");
  constexpr std::uint32_t kMaxN = 200;
  bool monotone = true;
  double worst_gap = 1.0;   // smallest hi_{n+1} - lo_n slack, positive when separated
  double worst_limit = 0.0; // largest |rho_200 - rho*|
  std::ostringstream detail;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    exact::RootBracket prev = exact::discrete_smallest_root(k, 1);
    for (std::uint32_t n = 2; n <= kMaxN; ++n) {
      exact::RootBracket cur = exact::discrete_smallest_root(k, n);
      if (!(cur.hi < prev.lo)) monotone = false;
      worst_gap = std::min(worst_gap, to_double(prev.lo - cur.hi));
      prev = std::move(cur);
    }
    const double target = inverse::singularity_discrete(k);
    const double err = std::abs(to_double(prev.midpoint()) - target);
    worst_limit = std::max(worst_limit, err);
    detail << "k=" << k << " rho_200=" << fmt(to_double(prev.midpoint())) << " |err|=" << fmt(err) << "; ";
  }
  r.margin = std::min(1e-3 - worst_limit, worst_gap);
  r.passed = monotone && worst_limit < 1e-3;
  detail << "min bracket separation=" << fmt(worst_gap);
  r.detail = detail.str();
  return r;
}

CheckResult continuous_singularity(const VerifyOptions&) {
  auto r = make(2, "continuous singularity");
  bool monotone = true;
  bool above = true;
  double worst_gap = 1.0;
  exact::RootBracket prev = exact::continuous_smallest_root(Rational(1));
  double min_lo = to_double(prev.lo);
  above = min_lo > kInvE;
  for (int t = 2; t <= 30; ++t) {
    exact::RootBracket cur = exact::continuous_smallest_root(Rational(t));
    if (!(cur.hi < prev.lo)) monotone = false;
    worst_gap = std::min(worst_gap, to_double(prev.lo - cur.hi));
    if (!(to_double(cur.lo) > kInvE)) above = false;
    min_lo = std::min(min_lo, to_double(cur.lo));
    prev = std::move(cur);
  }
  const double err = std::abs(to_double(prev.midpoint()) - kInvE);
  r.margin = std::min({1e-2 - err, worst_gap, min_lo - kInvE});
  r.passed = monotone && above && err < 1e-2;
  r.detail = "RootC(30)=" + fmt(to_double(prev.midpoint())) + " |err|=" + fmt(err) +
             " min lo - 1/e=" + fmt(min_lo - kInvE) + " min separation=" + fmt(worst_gap);
  return r;
}

CheckResult penrose_identity(const VerifyOptions& options) {
  auto r = make(3, "penrose identity");
  const auto start = Clock::now();
  SplitMix64 rng = replicate_stream(options.seed, 3);
  cluster::PenroseSweep total;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto sweep = cluster::penrose_sweep(n, 200, rng);
    total.configurations += sweep.configurations;
    total.nonzero_ursell += sweep.nonzero_ursell;
    total.failures += sweep.failures;
    total.interior_root_failures += sweep.interior_root_failures;
    total.leftmost_root_failures += sweep.leftmost_root_failures;
  }
  const double elapsed = seconds_since(start);
  r.passed = total.failures == 0 && elapsed < 300.0;
  r.margin = total.failures == 0 ? 300.0 - elapsed : -static_cast<double>(total.failures);
  r.detail = "failures=" + std::to_string(total.failures) + "/" + std::to_string(total.configurations) + " (" +
             std::to_string(total.interior_root_failures) + " with vertex 1 interior), nonzero U=" +
             std::to_string(total.nonzero_ursell) +
             ", leftmost-root failures=" + std::to_string(total.leftmost_root_failures) + ", " + fmt(elapsed) +
             "s";
  return r;
}

CheckResult discrete_free_energy(const VerifyOptions&) {
  auto r = make(4, "discrete free energy");
  const Rational rho(1, 5);
  const double x = inverse::inv_k(1, 0.2).value;
  const double density = exact::free_energy_density(exact::DiscreteModel{1, 2000}, rho);
  const double ratio = to_double(exact::discrete_cond_ratio(1, 2000, rho));
  const double expected_density = -std::log1p(-x);
  const double d_err = std::abs(density - expected_density);
  const double ratio_err = std::abs(ratio - (1.0 - x));
  r.passed = d_err < 1e-6 && ratio_err < 1e-8;
  r.margin = std::min(1e-6 - d_err, 1e-8 - ratio_err);
  r.detail = "density=" + fmt(density) + " limit=" + fmt(expected_density) + " |err|=" + fmt(d_err) +
             "; ratio |err|=" + fmt(ratio_err);
  return r;
}

CheckResult continuous_cond_limit(const VerifyOptions&) {
  auto r = make(5, "continuous conditional-ratio limit");
  const Rational rho(1, 5);
  const Rational s(1, 100);
  const Rational cond = exact::continuous_cond_ratio(rho, s, Rational(50));
  const double value = -log_rational(cond) / to_double(s);
  const double err = std::abs(value - inverse::inv_c(0.2).value);
  r.passed = err < 1e-2;
  r.margin = 1e-2 - err;
  r.detail = "-log Cond/s=" + fmt(value) + " InvC=" + fmt(inverse::inv_c(0.2).value) + " |err|=" + fmt(err);
  return r;
}

CheckResult continuous_free_energy(const VerifyOptions&) {
  auto r = make(6, "continuous free-energy density");
  const Rational rho(1, 5);
  double values[3];
  const int ts[3] = {50, 100, 200};
  for (int i = 0; i < 3; ++i) {
    values[i] = exact::free_energy_density(exact::ContinuousModel{Rational(ts[i])}, rho);
  }
  const double d1 = std::abs(values[1] - values[0]);
  const double d2 = std::abs(values[2] - values[1]);
  const auto candidates = inverse::free_energy_continuous_candidates(0.2);
  const double gap_printed = std::abs(values[2] - candidates.printed_formula);
  const double gap_telescoped = std::abs(values[2] - candidates.telescoped_limit);
  r.passed = d1 < 5e-3 && d2 < 5e-3;
  r.margin = 5e-3 - std::max(d1, d2);
  r.detail = "density(50,100,200)=" + fmt(values[0]) + "," + fmt(values[1]) + "," + fmt(values[2]) +
             "; printed-formula=" + fmt(candidates.printed_formula) + " gap=" + fmt(gap_printed) +
             "; InvC=" + fmt(candidates.telescoped_limit) + " gap=" + fmt(gap_telescoped) +
             "; matches " + (gap_telescoped < gap_printed ? "InvC" : "printed formula");
  return r;
}

CheckResult prior_cond_bound(const VerifyOptions&) {
  auto r = make(7, "conditional-ratio lower bound");
  const std::pair<Rational, double> rhos[] = {
      {Rational(1, 10), 0.1},
      {Rational(1, 5), 0.2},
      {parse_rational("0.3678794411714423"), 0.3678794411714423},
  };
  double worst = 1.0;
  std::string where;
  for (const auto& [rho, rho_d] : rhos) {
    const double lambda = inverse::inv_c(rho_d).value;
    for (int si = 1; si <= 30; ++si) {
      const Rational s = ratio(si, 10);
      for (int t = 0; t <= 5; ++t) {
        const double lhs = to_double(exact::continuous_cond_ratio(rho, s, Rational(t)));
        const double rhs = std::exp(-to_double(s) * lambda);
        if (lhs - rhs < worst) {
          worst = lhs - rhs;
          where = "rho=" + fmt(rho_d) + " s=" + fmt(to_double(s)) + " t=" + std::to_string(t);
        }
      }
    }
  }
  r.passed = worst >= -1e-12;
  r.margin = worst + 1e-12;
  r.detail = "min Cond - exp(-s InvC)=" + fmt(worst) + " at " + where;
  return r;
}

CheckResult fixed_point(const VerifyOptions&) {
  auto r = make(8, "fixed-point operator");
  const auto c = trees::Case::continuum();
  trees::FixedPointOptions tight;
  tight.tol = 1e-14;
  const auto at3 = trees::fixed_point_iterate(c, 0.3, tight);
  const double residual = std::abs(at3.mu - inverse::inv_c(0.3).value);
  const bool converged = at3.status == trees::FixedPointStatus::kConverged && residual < 1e-10;
  const bool diverged = trees::fixed_point_iterate(c, 0.4).status == trees::FixedPointStatus::kDiverged;
  double lo = 0.3;
  double hi = 0.4;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (trees::fixed_point_iterate(c, mid).status == trees::FixedPointStatus::kDiverged) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double boundary = 0.5 * (lo + hi);
  const double err = std::abs(boundary - kInvE);
  r.passed = converged && diverged && err < 1e-3;
  r.margin = std::min(1e-10 - residual, 1e-3 - err);
  r.detail = "mu(0.3) residual=" + fmt(residual) + (diverged ? ", 0.4 diverged" : ", 0.4 NOT diverged") +
             ", boundary=" + fmt(boundary) + " |err|=" + fmt(err);
  return r;
}

CheckResult tree_oracle(const VerifyOptions&) {
  auto r = make(9, "tree-series oracle");
  const trees::Case cases[] = {trees::Case::continuum(), trees::Case::discrete(1), trees::Case::discrete(2)};
  int mismatches = 0;
  int checked = 0;
  for (const auto& c : cases) {
    for (std::uint32_t n = 1; n <= 7; ++n) {
      ++checked;
      if (trees::enumerate_D(c, n) != trees::enumerate_D_recursive(c, n)) ++mismatches;
    }
  }
  r.passed = mismatches == 0;
  r.margin = mismatches == 0 ? 0.0 : -static_cast<double>(mismatches);
  r.detail = std::to_string(checked - mismatches) + "/" + std::to_string(checked) + " exact matches";
  return r;
}

CheckResult scaling(const VerifyOptions&) {
  auto r = make(10, "singularity scaling");
  std::vector<std::uint32_t> ks;
  for (int i = 0; i <= 200; ++i) {
    ks.push_back(static_cast<std::uint32_t>(std::lround(std::pow(10.0, 4.0 * i / 200.0))));
  }
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  double min_step = 1.0;
  std::size_t decreasing = 0;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    const double a = (ks[i - 1] + 1.0) * inverse::singularity_discrete(ks[i - 1]);
    const double b = (ks[i] + 1.0) * inverse::singularity_discrete(ks[i]);
    min_step = std::min(min_step, b - a);
    if (b < a) ++decreasing;
  }
  const double at1000 = std::abs(1001.0 * inverse::singularity_discrete(1000) - kInvE);
  const double scaled = 10001.0 * inverse::inv_k(10'000, 0.3 / 10001.0).value;
  const double inv_err = std::abs(scaled - inverse::inv_c(0.3).value);
  r.passed = min_step > 0.0 && at1000 < 2e-4 && inv_err < 1e-3;
  r.margin = std::min({min_step, 2e-4 - at1000, 1e-3 - inv_err});
  r.detail = std::to_string(ks.size()) + " sampled k, min increment=" + fmt(min_step) + " (" +
             std::to_string(decreasing) + "/" + std::to_string(ks.size() - 1) + " steps decrease)" +
             "; k=1000 |err|=" + fmt(at1000) + "; k=1e4 inverse |err|=" + fmt(inv_err);
  return r;
}

CheckResult simulation(const VerifyOptions& options) {
  auto r = make(11, "simulation suite");
  const auto start = Clock::now();
  const std::uint64_t reps = options.replicates;
  const unsigned w = options.workers;
  using shearer::ContinuousParams;
  using shearer::DiscreteParams;
  using shearer::Region;

  struct Item {
    std::string label;
    shearer::SimulationReport report;
  };
  std::vector<Item> items;
  const RandomSeed seed = options.seed;
  auto sub = [&](std::uint64_t i) { return RandomSeed{mix64(seed.master + i)}; };

  items.push_back({"intensity k=1", shearer::estimate_intensity(DiscreteParams{1, 0.25, 100}, reps, sub(1), w)});
  items.back().report.set_oracle(0.25);
  items.push_back({"intensity cont", shearer::estimate_intensity(ContinuousParams{0.25, 10.0}, reps, sub(2), w)});
  items.back().report.set_oracle(0.25);
  items.push_back({"avoid {1..10}",
                   shearer::estimate_avoidance(DiscreteParams{1, 0.25, 10}, Region{1, 10}, reps, sub(3), w)});
  items.back().report.set_oracle(to_double(exact::discrete_partition_eval(1, 10, Rational(1, 4))));
  items.push_back({"avoid [0,10]",
                   shearer::estimate_avoidance(ContinuousParams{0.25, 10.0}, Region{0, 10}, reps, sub(4), w)});
  items.back().report.set_oracle(to_double(exact::continuous_partition_eval(Rational(1, 4), Rational(10))));
  items.push_back({"cov k=1", shearer::test_r_dependence(DiscreteParams{1, 0.2, 12}, Region{1, 5},
                                                         Region{8, 12}, reps, sub(5), w)});
  items.back().report.set_oracle(0.0);
  items.push_back({"cov cont", shearer::test_r_dependence(ContinuousParams{0.25, 10.0}, Region{0, 4},
                                                          Region{5, 9}, reps, sub(6), w)});
  items.back().report.set_oracle(0.0);

  const double elapsed = seconds_since(start);
  std::uint64_t violations = 0;
  double worst_sigma = 0.0;
  std::string detail;
  for (const auto& item : items) {
    violations += item.report.violations;
    worst_sigma = std::max(worst_sigma, item.report.sigma_distance.value_or(INFINITY));
    detail += item.label + "=" + fmt(item.report.sigma_distance.value_or(INFINITY)) + "sd; ";
  }
  r.passed = violations == 0 && worst_sigma <= 4.0 && elapsed < 600.0;
  r.margin = violations == 0 ? 4.0 - worst_sigma : -static_cast<double>(violations);
  r.detail = detail + "violations=" + std::to_string(violations) + ", " + fmt(elapsed) + "s";
  return r;
}

CheckResult prior_bounds(const VerifyOptions&) {
  auto r = make(12, "prior bounds below singularities");
  double worst = 1.0;
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const double star = inverse::singularity_discrete(k);
    const auto b = inverse::prior_bounds(k);
    worst = std::min({worst, star - b.dobrushin, star - b.fernandez_procacci});
  }
  const auto c = inverse::prior_bounds_continuous();
  const double star = inverse::singularity_continuous();
  worst = std::min({worst, star - c.ruelle, star - c.fernandez_procacci_scoppola});
  r.passed = worst > 0.0;
  r.margin = worst;
  r.detail = "min singularity - bound=" + fmt(worst);
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "discrete singularity", discrete_singularity},
      {2, "continuous singularity", continuous_singularity},
      {3, "penrose identity", penrose_identity},
      {4, "discrete free energy", discrete_free_energy},
      {5, "continuous conditional-ratio limit", continuous_cond_limit},
      {6, "continuous free-energy density", continuous_free_energy},
      {7, "conditional-ratio lower bound", prior_cond_bound},
      {8, "fixed-point operator", fixed_point},
      {9, "tree-series oracle", tree_oracle},
      {10, "singularity scaling", scaling},
      {11, "simulation suite", simulation},
      {12, "prior bounds below singularities", prior_bounds},
  };
  return criteria;
}

std::vector<CheckResult> run_all(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (const auto& criterion : acceptance_criteria()) {
    try {
      results.push_back(criterion.run(options));
    } catch (const std::exception& e) {
      auto failed = make(criterion.id, criterion.name);
      failed.margin = -INFINITY;
      failed.detail = std::string("error: ") + e.what();
      results.push_back(std::move(failed));
    }
  }
  return results;
}

std::string format_line(const CheckResult& result) {
  char head[96];
  std::snprintf(head, sizeof head, "%s [%2d] %s  margin=%.6g  ", result.passed ? "PASS" : "FAIL", result.id,
                result.name.c_str(), result.margin);
  return head + result.detail;
}

}  // namespace tonks::verification
