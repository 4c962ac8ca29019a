// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/inverse_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tonks/errors.hpp"

namespace tonks::inverse {
namespace {

// Bisection on an increasing map over [lo, hi]. Stops once the residual is
// within tol, or when the interval stops shrinking in double precision; the
// endpoint with smaller residual wins.
template <typename Map>
InverseResult bisect_increasing(Map&& f, double rho, double tol, double lo, double hi, Branch branch) {
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double value = f(mid);
    if (tol > 0.0 && std::abs(value - rho) <= tol) return InverseResult{mid, std::abs(value - rho), branch};
    if (value < rho) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(f(lo) - rho);
  const double r_hi = std::abs(f(hi) - rho);
  return r_lo <= r_hi ? InverseResult{lo, r_lo, branch} : InverseResult{hi, r_hi, branch};
}

void check_rho(double rho, double limit, const char* what) {
  if (!(rho >= 0.0) || rho > limit * (1.0 + kEndpointSlack)) {
    throw DomainError(std::string(what) + ": rho = " + std::to_string(rho) +
                      " outside [0, " + std::to_string(limit) + "]");
  }
}

}  // namespace

double f_k_eval(std::uint32_t k, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("f_k needs x in [0, 1]");
  if (k == 0) return x;
  if (x == 1.0) return 0.0;
  return x * std::exp(static_cast<double>(k) * std::log1p(-x));
}

double f_c_eval(double y) {
  if (!(y >= 0.0)) throw DomainError("f_c needs y >= 0");
  return y * std::exp(-y);
}

double singularity_discrete(std::uint32_t k) {
  if (k == 0) return 1.0;
  const double kd = static_cast<double>(k);
  if (k <= 15) return std::pow(kd, kd) / std::pow(kd + 1.0, kd + 1.0);
  return std::exp(kd * std::log1p(-1.0 / (kd + 1.0))) / (kd + 1.0);
}

double singularity_continuous() { return 1.0 / std::numbers::e; }

InverseResult inv_k(std::uint32_t k, double rho, double tol) {
  const double limit = singularity_discrete(k);
  check_rho(rho, limit, "InvK");
  const double top = 1.0 / (static_cast<double>(k) + 1.0);
  if (rho >= limit) return InverseResult{top, std::abs(f_k_eval(k, top) - rho), Branch::kDiscrete};
  if (k == 0) return InverseResult{rho, 0.0, Branch::kDiscrete};
  return bisect_increasing([k](double x) { return f_k_eval(k, x); }, rho, tol, 0.0, top, Branch::kDiscrete);
}

InverseResult inv_c(double rho, double tol) {
  const double limit = singularity_continuous();
  check_rho(rho, limit, "InvC");
  if (rho >= limit) return InverseResult{1.0, std::abs(f_c_eval(1.0) - rho), Branch::kContinuous};
  return bisect_increasing(f_c_eval, rho, tol, 0.0, 1.0, Branch::kContinuous);
}

double free_energy_discrete(std::uint32_t k, double rho) {
  return -std::log1p(-inv_k(k, rho).value);
}

ContinuousFreeEnergyCandidates free_energy_continuous_candidates(double rho) {
  const double lambda = inv_c(rho).value;
  const double q = rho * lambda;
  return ContinuousFreeEnergyCandidates{rho * (1.0 + 2.0 * q + q * q / 2.0), lambda};
}

double cond_limit_discrete(std::uint32_t k, double rho) { return 1.0 - inv_k(k, rho).value; }

double cond_limit_derivative_discrete(std::uint32_t k, double rho) {
  const double limit = singularity_discrete(k);
  check_rho(rho, limit, "cond_limit_derivative_discrete");
  if (k >= 1 && rho >= limit * (1.0 - kEndpointSlack)) {
    throw SingularPointError("derivative of the conditional limit diverges at rho*_k");
  }
  const double xi = cond_limit_discrete(k, rho);
  const double kd = static_cast<double>(k);
  return 1.0 / (kd * rho / xi - std::pow(xi, kd));
}

double inv_c_derivative(double rho) {
  const double limit = singularity_continuous();
  check_rho(rho, limit, "inv_c_derivative");
  if (rho >= limit * (1.0 - kEndpointSlack)) {
    throw SingularPointError("d InvC / d rho diverges at 1/e");
  }
  const double lambda = inv_c(rho).value;
  return std::exp(lambda) / (1.0 - lambda);
}

std::vector<ScalingRow> scaling_table(std::span<const std::uint32_t> ks, double rho) {
  check_rho(rho, singularity_continuous(), "scaling_table");
  std::vector<ScalingRow> rows;
  rows.reserve(ks.size());
  for (std::uint32_t k : ks) {
    const double kp1 = static_cast<double>(k) + 1.0;
    ScalingRow row;
    row.k = k;
    row.scaled_singularity = k == 0 ? 1.0 : std::exp(static_cast<double>(k) * std::log1p(-1.0 / kp1));
    // rho/(k+1) <= rho*_k because (1 - 1/(k+1))^k >= 1/e; clamp float noise.
    const double target = std::min(rho / kp1, singularity_discrete(k));
    row.scaled_inverse = kp1 * inv_k(k, target).value;
    rows.push_back(row);
  }
  return rows;
}

PriorBounds prior_bounds(std::uint32_t k) {
  if (k == 0) throw DomainError("discrete prior bounds need k >= 1");
  const double kd = static_cast<double>(k);
  return PriorBounds{singularity_discrete(2 * k), 1.0 / (std::sqrt(2.0 * kd * (kd + 1.0)) + 2.0 * kd + 1.0)};
}

ContinuousPriorBounds prior_bounds_continuous() {
  return ContinuousPriorBounds{1.0 / (2.0 * std::numbers::e), 1.0 / (2.0 + std::numbers::sqrt2)};
}

}  // namespace tonks::inverse
