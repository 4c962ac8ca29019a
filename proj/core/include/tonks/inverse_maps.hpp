// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

/// The maps f_k(x) = x (1-x)^k and f_c(y) = y e^{-y}, their inverses on the
/// increasing branch, and the closed forms that depend on them.
///
/// All free-energy outputs follow the -log Z / volume sign convention.
namespace tonks::inverse {

/// Residual target for the inverses; 0 runs bisection to full double precision.
inline constexpr double kDefaultTolerance = 0.0;
/// Relative slack accepted when a float argument sits on a singularity.
inline constexpr double kEndpointSlack = 1e-15;

enum class Branch {
  kDiscrete,    ///< pre-image in [0, 1/(k+1)]
  kContinuous,  ///< pre-image in [0, 1]
};

struct InverseResult {
  double value = 0.0;
  double residual = 0.0;  ///< |f(value) - rho|
  Branch branch = Branch::kContinuous;
};

struct ScalingRow {
  std::uint32_t k = 0;
  double scaled_singularity = 0.0;  ///< (k+1) rho*_k
  double scaled_inverse = 0.0;      ///< (k+1) InvK(rho / (k+1))
};

double f_k_eval(std::uint32_t k, double x);
double f_c_eval(double y);

InverseResult inv_k(std::uint32_t k, double rho, double tol = kDefaultTolerance);
InverseResult inv_c(double rho, double tol = kDefaultTolerance);

/// k^k / (k+1)^(k+1) with 0^0 = 1.
double singularity_discrete(std::uint32_t k);
/// 1/e.
double singularity_continuous();

/// -log(1 - InvK(rho)).
double free_energy_discrete(std::uint32_t k, double rho);

struct ContinuousFreeEnergyCandidates {
  /// rho (1 + 2 rho InvC + rho^2 InvC^2 / 2), the printed closed form.
  double printed_formula = 0.0;
  /// InvC(rho), obtained by telescoping the conditional-ratio limit.
  double telescoped_limit = 0.0;
};

ContinuousFreeEnergyCandidates free_energy_continuous_candidates(double rho);

/// lim_n Z(n)/Z(n-1) = 1 - InvK(rho).
double cond_limit_discrete(std::uint32_t k, double rho);

/// d/drho of 1 - InvK(rho): 1 / (k rho / Xi - Xi^k) with Xi = 1 - InvK(rho).
/// Throws SingularPointError at rho = rho*_k for k >= 1.
double cond_limit_derivative_discrete(std::uint32_t k, double rho);

/// d InvC / d rho = e^InvC / (1 - InvC). Throws SingularPointError at 1/e.
double inv_c_derivative(double rho);

std::vector<ScalingRow> scaling_table(std::span<const std::uint32_t> ks, double rho);

/// Earlier cluster-expansion lower bounds on the singularity.
struct PriorBounds {
  double dobrushin = 0.0;           ///< (2k)^{2k} / (2k+1)^{2k+1}
  double fernandez_procacci = 0.0;  ///< 1 / (sqrt(2k(k+1)) + 2k + 1)
};
struct ContinuousPriorBounds {
  double ruelle = 0.0;                      ///< 1 / (2e)
  double fernandez_procacci_scoppola = 0.0; ///< 1 / (2 + sqrt 2)
};

PriorBounds prior_bounds(std::uint32_t k);
ContinuousPriorBounds prior_bounds_continuous();

}  // namespace tonks::inverse
