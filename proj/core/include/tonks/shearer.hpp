// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tonks/rng.hpp"

/// Seeded block-factor constructions of Shearer's point process and Monte
/// Carlo checks of its intensity, hard-core, dependence range and avoidance
/// probabilities.
///
/// Discrete: X i.i.d. Bernoulli(InvK(rho)) on {1-k..n},
///   Y_j = X_j prod_{i=1..k} (1 - X_{j-i}) for j in {1..n}.
/// Continuous: xi Poisson(InvC(rho)) on [-1, t]; eta keeps the points of xi
///   in [0, t] whose open left unit interval holds no point of xi.
namespace tonks::shearer {

struct DiscreteParams {
  std::uint32_t k = 1;
  double rho = 0.0;
  std::uint32_t n = 1;
};

struct ContinuousParams {
  double rho = 0.0;
  double t = 1.0;
};

using Params = std::variant<DiscreteParams, ContinuousParams>;

/// Closed region of the window. Discrete: the integer sites lo..hi.
struct Region {
  double lo = 0.0;
  double hi = 0.0;
};

struct DiscreteSample {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  /// Indexed by site + k, covering {1-k..n}.
  std::vector<std::uint8_t> x_bits;
  /// Same indexing; the margin sites {1-k..0} are never set.
  std::vector<std::uint8_t> y_bits;

  [[nodiscard]] int first_site() const { return 1 - static_cast<int>(k); }
  [[nodiscard]] bool x(int site) const { return x_bits[static_cast<std::size_t>(site - first_site())]; }
  [[nodiscard]] bool y(int site) const { return y_bits[static_cast<std::size_t>(site - first_site())]; }
};

struct ContinuousSample {
  double t = 0.0;
  std::vector<double> xi_points;   ///< sorted, in [-1, t]
  std::vector<double> eta_points;  ///< sorted, in [0, t]
};

struct SimulationReport {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t replicates = 0;
  std::uint64_t violations = 0;
  std::optional<double> oracle;
  /// |estimate - oracle| / std_error (0 when both coincide).
  std::optional<double> sigma_distance;

  void set_oracle(double value);
  [[nodiscard]] bool within_sigma(double sigmas) const;
};

DiscreteSample sample_discrete_shearer(std::uint32_t k, double rho, std::uint32_t n, RandomSeed seed);
DiscreteSample sample_discrete_shearer(std::uint32_t k, double rho, std::uint32_t n, SplitMix64& rng);

ContinuousSample sample_continuous_shearer(double rho, double t, RandomSeed seed);
ContinuousSample sample_continuous_shearer(double rho, double t, SplitMix64& rng);

/// Points of sorted_xi at positions >= from that survive the one-sided rule.
std::vector<double> one_sided_thinning(std::span<const double> sorted_xi, double from);

/// Pairs of occupied sites at distance <= k.
std::uint64_t check_hard_core(const DiscreteSample& sample);
/// Pairs of eta points at distance < 1.
std::uint64_t check_hard_core(const ContinuousSample& sample);

/// Mean points per unit volume on {1..n} or [0, t].
SimulationReport estimate_intensity(const Params& params, std::uint64_t replicates,
                                    RandomSeed seed, unsigned workers = 1);

/// Empirical P(region is point-free), binomial standard error.
SimulationReport estimate_avoidance(const Params& params, Region region, std::uint64_t replicates,
                                    RandomSeed seed, unsigned workers = 1);

/// Empirical covariance of the point counts in two regions at distance at
/// least the hard-core radius. Throws GeometryError otherwise.
SimulationReport test_r_dependence(const Params& params, Region a, Region b,
                                   std::uint64_t replicates, RandomSeed seed,
                                   unsigned workers = 1);

/// {"estimate":..,"std_error":..,"replicates":..,"violations":..,"oracle":..,"sigma_distance":..}
std::string to_json(const SimulationReport& report);

}  // namespace tonks::shearer
