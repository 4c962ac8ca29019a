// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/shearer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "json.hpp"
#include "tonks/errors.hpp"
#include "tonks/inverse_maps.hpp"

namespace tonks::shearer {
namespace {

// Runs fn(index, rng) for every replicate and returns the observations in
// replicate order. Each replicate owns the stream derived from (seed, index),
// so the result does not depend on `workers`.
template <typename Fn>
auto run_replicates(std::uint64_t replicates, RandomSeed seed, unsigned workers, Fn fn) {
  using Observation = decltype(fn(std::uint64_t{0}, std::declval<SplitMix64&>()));
  std::vector<Observation> out(replicates);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) {
      SplitMix64 rng = replicate_stream(seed, r);
      out[r] = fn(r, rng);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || replicates < 2) {
    work(0, replicates);
    return out;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (replicates + workers - 1) / workers;
  for (std::uint64_t begin = 0; begin < replicates; begin += chunk) {
    threads.emplace_back(work, begin, std::min(replicates, begin + chunk));
  }
  for (auto& th : threads) th.join();
  return out;
}

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanAndError mean_and_error(const std::vector<double>& values) {
  MeanAndError m;
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return m;
  double squares = 0.0;
  for (double v : values) squares += (v - m.mean) * (v - m.mean);
  const double variance = squares / static_cast<double>(values.size() - 1);
  m.std_error = std::sqrt(variance / static_cast<double>(values.size()));
  return m;
}

double hard_core_radius(const Params& params) {
  return std::visit(
      [](const auto& p) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, DiscreteParams>) {
          return static_cast<double>(p.k) + 1.0;
        } else {
          return 1.0;
        }
      },
      params);
}

void check_region(const Params& params, Region region) {
  if (!(region.lo <= region.hi)) throw DomainError("region needs lo <= hi");
  std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, DiscreteParams>) {
          if (region.lo < 1.0 || region.hi > static_cast<double>(p.n)) {
            throw DomainError("region must lie inside the sites {1..n}");
          }
        } else {
          if (region.lo < 0.0 || region.hi > p.t) throw DomainError("region must lie inside [0, t]");
        }
      },
      params);
}

std::uint64_t count_in(const DiscreteSample& s, Region region) {
  std::uint64_t count = 0;
  const int lo = static_cast<int>(std::ceil(region.lo));
  const int hi = static_cast<int>(std::floor(region.hi));
  for (int site = lo; site <= hi; ++site) count += s.y(site) ? 1 : 0;
  return count;
}

std::uint64_t count_in(const ContinuousSample& s, Region region) {
  const auto first = std::lower_bound(s.eta_points.begin(), s.eta_points.end(), region.lo);
  const auto last = std::upper_bound(s.eta_points.begin(), s.eta_points.end(), region.hi);
  return static_cast<std::uint64_t>(last - first);
}

// One replicate of either model: point counts in the requested regions plus
// the hard-core violations of the whole sample.
struct Draw {
  std::uint64_t total = 0;
  std::uint64_t violations = 0;
  double volume = 0.0;
};

template <typename Visitor>
auto with_sample(const Params& params, SplitMix64& rng, Visitor&& visit) {
  return std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, DiscreteParams>) {
          return visit(sample_discrete_shearer(p.k, p.rho, p.n, rng), static_cast<double>(p.n));
        } else {
          return visit(sample_continuous_shearer(p.rho, p.t, rng), p.t);
        }
      },
      params);
}

}  // namespace

void SimulationReport::set_oracle(double value) {
  oracle = value;
  const double gap = std::abs(estimate - value);
  if (std_error > 0.0) {
    sigma_distance = gap / std_error;
  } else {
    sigma_distance = gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
}

bool SimulationReport::within_sigma(double sigmas) const {
  return sigma_distance.has_value() && *sigma_distance <= sigmas;
}

DiscreteSample sample_discrete_shearer(std::uint32_t k, double rho, std::uint32_t n, SplitMix64& rng) {
  if (n == 0) throw DomainError("discrete sampler needs n >= 1");
  const double p = inverse::inv_k(k, rho).value;
  DiscreteSample s;
  s.k = k;
  s.n = n;
  const std::size_t window = static_cast<std::size_t>(n) + k;
  s.x_bits.resize(window);
  s.y_bits.assign(window, 0);
  for (auto& bit : s.x_bits) bit = rng.uniform() < p ? 1 : 0;
  for (std::size_t j = k; j < window; ++j) {
    bool keep = s.x_bits[j] != 0;
    for (std::size_t i = 1; keep && i <= k; ++i) keep = s.x_bits[j - i] == 0;
    s.y_bits[j] = keep ? 1 : 0;
  }
  return s;
}

DiscreteSample sample_discrete_shearer(std::uint32_t k, double rho, std::uint32_t n, RandomSeed seed) {
  SplitMix64 rng = replicate_stream(seed, 0);
  return sample_discrete_shearer(k, rho, n, rng);
}

std::vector<double> one_sided_thinning(std::span<const double> sorted_xi, double from) {
  std::vector<double> kept;
  for (std::size_t i = 0; i < sorted_xi.size(); ++i) {
    const double x = sorted_xi[i];
    if (x < from) continue;
    if (i == 0 || sorted_xi[i - 1] <= x - 1.0) kept.push_back(x);
  }
  return kept;
}

ContinuousSample sample_continuous_shearer(double rho, double t, SplitMix64& rng) {
  if (!(t > 0.0)) throw DomainError("continuous sampler needs t > 0");
  const double lambda = inverse::inv_c(rho).value;
  ContinuousSample s;
  s.t = t;
  const double length = t + 1.0;
  if (lambda > 0.0) {
    std::poisson_distribution<long> count_dist(lambda * length);
    const long count = count_dist(rng);
    s.xi_points.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) s.xi_points.push_back(-1.0 + rng.uniform() * length);
    std::sort(s.xi_points.begin(), s.xi_points.end());
  }
  s.eta_points = one_sided_thinning(s.xi_points, 0.0);
  return s;
}

ContinuousSample sample_continuous_shearer(double rho, double t, RandomSeed seed) {
  SplitMix64 rng = replicate_stream(seed, 0);
  return sample_continuous_shearer(rho, t, rng);
}

std::uint64_t check_hard_core(const DiscreteSample& sample) {
  std::uint64_t violations = 0;
  const std::size_t size = sample.y_bits.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (!sample.y_bits[i]) continue;
    for (std::size_t j = i + 1; j < size && j - i <= sample.k; ++j) violations += sample.y_bits[j] ? 1 : 0;
  }
  return violations;
}

std::uint64_t check_hard_core(const ContinuousSample& sample) {
  std::uint64_t violations = 0;
  const auto& pts = sample.eta_points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size() && pts[j] - pts[i] < 1.0; ++j) ++violations;
  }
  return violations;
}

SimulationReport estimate_intensity(const Params& params, std::uint64_t replicates, RandomSeed seed,
                                    unsigned workers) {
  auto draws = run_replicates(replicates, seed, workers, [&](std::uint64_t, SplitMix64& rng) {
    return with_sample(params, rng, [](const auto& sample, double volume) {
      Draw d;
      d.total = count_in(sample, Region{0.0, volume});
      d.violations = check_hard_core(sample);
      d.volume = volume;
      return d;
    });
  });
  std::vector<double> densities;
  densities.reserve(draws.size());
  SimulationReport report;
  for (const auto& d : draws) {
    densities.push_back(static_cast<double>(d.total) / d.volume);
    report.violations += d.violations;
  }
  const auto m = mean_and_error(densities);
  report.estimate = m.mean;
  report.std_error = m.std_error;
  report.replicates = replicates;
  return report;
}

SimulationReport estimate_avoidance(const Params& params, Region region, std::uint64_t replicates,
                                    RandomSeed seed, unsigned workers) {
  check_region(params, region);
  auto draws = run_replicates(replicates, seed, workers, [&](std::uint64_t, SplitMix64& rng) {
    return with_sample(params, rng, [&](const auto& sample, double) {
      return std::pair<bool, std::uint64_t>{count_in(sample, region) == 0, check_hard_core(sample)};
    });
  });
  SimulationReport report;
  std::uint64_t empty = 0;
  for (const auto& [is_empty, violations] : draws) {
    empty += is_empty ? 1 : 0;
    report.violations += violations;
  }
  report.replicates = replicates;
  if (replicates > 0) {
    const double p = static_cast<double>(empty) / static_cast<double>(replicates);
    report.estimate = p;
    report.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(replicates));
  }
  return report;
}

SimulationReport test_r_dependence(const Params& params, Region a, Region b, std::uint64_t replicates,
                                   RandomSeed seed, unsigned workers) {
  check_region(params, a);
  check_region(params, b);
  if (b.lo < a.lo) std::swap(a, b);
  const double gap = b.lo - a.hi;
  if (gap < hard_core_radius(params)) {
    throw GeometryError("regions must be at distance >= the hard-core radius");
  }
  struct Counts {
    double a = 0.0;
    double b = 0.0;
    std::uint64_t violations = 0;
  };
  auto draws = run_replicates(replicates, seed, workers, [&](std::uint64_t, SplitMix64& rng) {
    return with_sample(params, rng, [&](const auto& sample, double) {
      return Counts{static_cast<double>(count_in(sample, a)), static_cast<double>(count_in(sample, b)),
                    check_hard_core(sample)};
    });
  });
  SimulationReport report;
  report.replicates = replicates;
  if (draws.size() < 2) return report;
  double mean_a = 0.0;
  double mean_b = 0.0;
  for (const auto& d : draws) {
    mean_a += d.a;
    mean_b += d.b;
    report.violations += d.violations;
  }
  const auto r = static_cast<double>(draws.size());
  mean_a /= r;
  mean_b /= r;
  std::vector<double> products;
  products.reserve(draws.size());
  for (const auto& d : draws) products.push_back((d.a - mean_a) * (d.b - mean_b));
  const auto m = mean_and_error(products);
  report.estimate = m.mean * r / (r - 1.0);
  report.std_error = m.std_error;
  return report;
}

std::string to_json(const SimulationReport& report) {
  nlohmann::ordered_json out;
  out["estimate"] = report.estimate;
  out["std_error"] = report.std_error;
  out["replicates"] = report.replicates;
  out["violations"] = report.violations;
  out["oracle"] = report.oracle ? nlohmann::ordered_json(*report.oracle) : nlohmann::ordered_json(nullptr);
  out["sigma_distance"] =
      report.sigma_distance ? nlohmann::ordered_json(*report.sigma_distance) : nlohmann::ordered_json(nullptr);
  return out.dump();
}

}  // namespace tonks::shearer
