// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "tonks/polynomial.hpp"
#include "tonks/rational.hpp"

/// Exact partition functions of the one-dimensional hard-sphere gas at
/// negative activity z = -rho.
///
/// Discrete model: sites {1..n} of Z, hard-core radius k+1 (two occupied
/// sites must be at distance >= k+1). Continuous model: the interval [0,t]
/// with hard-core radius 1 and Lebesgue measure.
namespace tonks::exact {

struct DiscreteModel {
  std::uint32_t k = 0;  ///< gap parameter; hard-core radius is k + 1
  std::uint32_t n = 0;  ///< block length
};

struct ContinuousModel {
  Rational t;  ///< interval length, t >= 0
};

/// Interval [lo, hi] isolating the smallest positive root. When
/// guaranteed_sign_change is set, the function is > 0 at lo and <= 0 at hi.
struct RootBracket {
  Rational lo;
  Rational hi;
  bool guaranteed_sign_change = false;

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
  [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Rational default_root_tolerance();  // 10^-12

// --- discrete model -------------------------------------------------------

/// Z(z, {1..n}); coefficient m is C(n - (m-1)k, m), the number of m-subsets
/// with pairwise gaps >= k+1.
ActivityPolynomial discrete_partition_polynomial(std::uint32_t k, std::uint32_t n);

/// Z(-rho, {1..n}). Requires rho >= 0.
Rational discrete_partition_eval(std::uint32_t k, std::uint32_t n, const Rational& rho);

/// Z(-rho, n) / Z(-rho, n-1); throws ZeroDenominatorError if the denominator
/// vanishes.
Rational discrete_cond_ratio(std::uint32_t k, std::uint32_t n, const Rational& rho);

/// Smallest positive root of rho -> Z(-rho, {1..n}), n >= 1.
///
/// Bisects the downward-closed predicate "Z(-rho, j) > 0 for all j <= n",
/// evaluated exactly through the integer-scaled recursion
/// Z(j) = Z(j-1) - rho Z(j-k-1). The bracket is flagged as a guaranteed sign
/// change once Z(-hi, n) <= 0 is confirmed.
RootBracket discrete_smallest_root(std::uint32_t k, std::uint32_t n,
                                   const Rational& tol = default_root_tolerance());

// --- continuous model -----------------------------------------------------

/// Z(-rho, [0,t]) = sum_j (-rho)^j (t - (j-1))_+^j / j!. Equals 1 at t = 0.
Rational continuous_partition_eval(const Rational& rho, const Rational& t);

/// rho -> Z(-rho, [0,t]) as an exact polynomial in rho.
Polynomial continuous_partition_polynomial_in_rho(const Rational& t);

/// Z(-rho, s+t) / Z(-rho, t); throws ZeroDenominatorError.
Rational continuous_cond_ratio(const Rational& rho, const Rational& s, const Rational& t);

/// Smallest positive root of rho -> Z(-rho, [0,t]) for t > 0, by bisection
/// on exact Sturm root counts over (0, mid].
RootBracket continuous_smallest_root(const Rational& t,
                                     const Rational& tol = default_root_tolerance());

/// Checks Z(-rho, t+s) = Z(-rho, t) - rho * int_0^s Z(-rho, max(t+x-1, 0)) dx
/// exactly, integrating the piecewise-polynomial integrand piece by piece.
/// Requires rho, t >= 0 and 0 <= s < 1.
bool verify_deletion_contraction(const Rational& rho, const Rational& t, const Rational& s);

/// The integral term of the identity above, exposed for diagnostics.
Rational deletion_contraction_integral(const Rational& rho, const Rational& t,
                                       const Rational& s);

// --- free-energy density ----------------------------------------------------

/// -log Z(-rho, {1..n}) / n. Throws DomainError when Z <= 0.
double free_energy_density(const DiscreteModel& model, const Rational& rho);

/// -log Z(-rho, [0,t]) / t. Throws DomainError when Z <= 0 or t == 0.
double free_energy_density(const ContinuousModel& model, const Rational& rho);

}  // namespace tonks::exact
