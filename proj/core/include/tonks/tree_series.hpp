// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "tonks/rational.hpp"

/// Tree-operator series of the one-sided partition scheme: child-weight
/// profiles G (root) and H (non-root), their generating functions, the
/// fixed point of mu -> rho h(mu), and the tree sums D(n), P_N.
namespace tonks::trees {

/// Discrete (gap parameter k) or continuous hard-sphere case.
struct Case {
  bool continuous = true;
  std::uint32_t k = 0;

  static Case discrete(std::uint32_t k) { return Case{false, k}; }
  static Case continuum() { return Case{true, 0}; }
};

enum class Kind { kRoot, kNonRoot };

/// Largest tree size handled by the enumerators.
inline constexpr std::uint32_t kMaxTreeSize = 9;

/// Weight of a vertex with s children: G(s) for the root, H(s) otherwise.
Rational child_weight(const Case& c, Kind kind, std::uint32_t s);
/// Largest s with nonzero weight, or -1 when the support is infinite.
int weight_support(const Case& c, Kind kind);

double gen_fun_g(const Case& c, double mu);
double gen_fun_h(const Case& c, double mu);

struct RatioMax {
  double argmax = 0.0;
  double max = 0.0;
};

/// Global maximum on [0, inf) of mu / g(mu) (kRoot) or mu / h(mu) (kNonRoot).
/// Discrete formulas need k >= 1.
RatioMax ratio_max(const Case& c, Kind kind);

enum class FixedPointStatus { kConverged, kDiverged, kIterationCap };

struct FixedPointResult {
  FixedPointStatus status = FixedPointStatus::kIterationCap;
  double mu = 0.0;  ///< meaningful when converged
  std::uint64_t iterations = 0;
  double last_value = 0.0;
};

struct FixedPointOptions {
  double tol = 1e-10;
  std::uint64_t max_iter = 1'000'000;
  double divergence_threshold = 1e6;
};

/// Iterates mu_{j+1} = rho h(mu_j) from mu_0 = 0 until |mu - rho h(mu)| <= tol
/// (converged), mu exceeds the threshold (diverged), or max_iter is hit.
FixedPointResult fixed_point_iterate(const Case& c, double rho,
                                     const FixedPointOptions& options = {});

/// D(n) = sum over labelled trees on {1..n} rooted at 1 of
/// G(s_1) prod_{i>=2} H(s_i), via Pruefer sequences. 1 <= n <= kMaxTreeSize.
Rational enumerate_D(const Case& c, std::uint32_t n);

/// The same sum from exponential generating functions of rooted forests.
Rational enumerate_D_recursive(const Case& c, std::uint32_t n);

/// P_N(rho) = sum_{n<=N} rho^n / n! D(n).
double truncated_P(const Case& c, double rho, std::uint32_t N);

enum class QConvention {
  kRhoMu,  ///< Q = rho mu(rho)
  kMu,     ///< Q = lim T_rho^n(0) = mu(rho)
};

/// Continuous: rho (1 + 2Q + Q^2/2).
/// Discrete:   rho/(1-rho) (1 + 2kQ + C(k+1,2) Q^2).
/// mu comes from fixed_point_iterate; throws DomainError if it diverges.
double closed_form_P(const Case& c, double rho, QConvention convention);

struct SeriesReport {
  double rho = 0.0;
  std::string t;  ///< volume as "p/q"
  std::uint32_t N = 0;
  double truncated = 0.0;
  double truncated_previous = 0.0;  ///< P_{N-1}
  double closed_rho_mu = 0.0;
  double closed_mu = 0.0;
  double inv_c = 0.0;
  double exact_density = 0.0;  ///< -log Z(-rho, t) / t
  double tolerance = 0.0;
  bool truncated_matches_density = false;
  bool closed_rho_mu_matches_density = false;
  bool closed_mu_matches_density = false;
  bool inv_c_matches_density = false;
};

/// Tabulates the continuous series quantities against the exact density.
/// rho is read exactly from its decimal/fraction text.
SeriesReport series_vs_free_energy_report(const Rational& rho, const Rational& t,
                                          std::uint32_t N, double tolerance = 5e-3);

}  // namespace tonks::trees
