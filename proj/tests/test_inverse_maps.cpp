// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "tonks/errors.hpp"
#include "tonks/exact_eval.hpp"
#include "tonks/inverse_maps.hpp"
#include "tonks/rational.hpp"

namespace tonks::inverse {
namespace {

const double kInvE = std::exp(-1.0);

TEST(ForwardMaps, SpecExamples) {
  EXPECT_DOUBLE_EQ(f_k_eval(1, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(f_c_eval(1.0), kInvE);
  EXPECT_EQ(f_k_eval(3, 0.0), 0.0);
  EXPECT_THROW(f_k_eval(1, 1.5), DomainError);
  EXPECT_THROW(f_c_eval(-0.1), DomainError);
}

TEST(Inverses, SpecExamples) {
  EXPECT_DOUBLE_EQ(inv_k(1, 0.25).value, 0.5);
  EXPECT_NEAR(inv_c(kInvE).value, 1.0, 1e-7);  // flat maximum: error ~ sqrt(eps)
  const auto r = inv_c(0.2);
  EXPECT_NEAR(r.value, 0.259171, 1e-6);
  EXPECT_NEAR(f_c_eval(r.value), 0.2, 1e-15);
  EXPECT_EQ(r.branch, Branch::kContinuous);
  EXPECT_EQ(inv_k(2, 0.1).branch, Branch::kDiscrete);
  EXPECT_THROW(inv_k(1, 0.26), DomainError);
  EXPECT_THROW(inv_c(0.37), DomainError);
  EXPECT_THROW(inv_c(-0.01), DomainError);
  EXPECT_NO_THROW(inv_c(kInvE * (1 + 5e-16)));  // endpoint slack
}

TEST(Inverses, ToleranceStopsEarly) {
  const auto coarse = inv_c(0.2, 1e-3);
  EXPECT_LE(coarse.residual, 1e-3);
  EXPECT_LT(std::abs(coarse.value - inv_c(0.2).value), 1e-2);
  EXPECT_LE(inv_c(0.2).residual, 1e-16);
}

TEST(Inverses, RoundTripAndMonotoneOnGrids) {
  for (std::uint32_t k : {0u, 1u, 2u, 5u, 30u}) {
    const double star = singularity_discrete(k);
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double rho = star * i / 100.0;
      const auto r = inv_k(k, rho);
      EXPECT_NEAR(f_k_eval(k, r.value), rho, 1e-12) << "k=" << k << " i=" << i;
      EXPECT_GT(r.value, prev);
      EXPECT_LE(r.value, 1.0 / (k + 1) + 1e-15);
      prev = r.value;
    }
  }
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double rho = kInvE * i / 100.0;
    const auto r = inv_c(rho);
    EXPECT_NEAR(f_c_eval(r.value), rho, 1e-12);
    EXPECT_GT(r.value, prev);
    prev = r.value;
  }
}

TEST(Singularities, SpecExamples) {
  EXPECT_EQ(singularity_discrete(0), 1.0);
  EXPECT_DOUBLE_EQ(singularity_discrete(1), 0.25);
  EXPECT_DOUBLE_EQ(singularity_discrete(2), 4.0 / 27.0);
  EXPECT_NEAR(singularity_continuous(), 0.3678794, 1e-7);
  // Large k takes the log1p path; compare with the direct ratio.
  EXPECT_NEAR(singularity_discrete(40), std::pow(40.0 / 41.0, 40) / 41.0, 1e-16);
}

TEST(FreeEnergy, SpecExamples) {
  EXPECT_NEAR(free_energy_discrete(0, 0.3), -std::log(0.7), 1e-15);
  EXPECT_EQ(free_energy_discrete(4, 0.0), 0.0);
  EXPECT_NEAR(free_energy_discrete(1, 0.2), -std::log((1 + std::sqrt(0.2)) / 2), 1e-15);
  EXPECT_THROW(free_energy_discrete(1, 0.3), DomainError);

  const auto zero = free_energy_continuous_candidates(0.0);
  EXPECT_EQ(zero.printed_formula, 0.0);
  EXPECT_EQ(zero.telescoped_limit, 0.0);
  const auto at_e = free_energy_continuous_candidates(kInvE);
  EXPECT_NEAR(at_e.printed_formula, kInvE * (1 + 2 * kInvE + kInvE * kInvE / 2), 1e-12);  // 0.663444
  EXPECT_NEAR(at_e.telescoped_limit, 1.0, 1e-7);
  EXPECT_NEAR(free_energy_continuous_candidates(0.2).telescoped_limit, 0.259171, 1e-6);
  EXPECT_THROW(free_energy_continuous_candidates(0.4), DomainError);
}

TEST(CondLimit, SpecExamplesAndExactEvalAgreement) {
  EXPECT_EQ(cond_limit_discrete(3, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(cond_limit_discrete(1, 0.25), 0.5);
  EXPECT_NEAR(cond_limit_discrete(1, 0.2), 0.723607, 1e-6);
  const double exact = to_double(exact::discrete_cond_ratio(1, 2000, Rational(1, 5)));
  EXPECT_NEAR(exact, cond_limit_discrete(1, 0.2), 1e-8);
}

TEST(Derivatives, SpecExamples) {
  for (double rho : {0.0, 0.3, 0.9}) EXPECT_DOUBLE_EQ(cond_limit_derivative_discrete(0, rho), -1.0);
  EXPECT_DOUBLE_EQ(cond_limit_derivative_discrete(1, 0.0), -1.0);
  EXPECT_GT(std::abs(cond_limit_derivative_discrete(1, 0.25 - 1e-6)), 1e2);
  EXPECT_THROW(cond_limit_derivative_discrete(1, 0.25), SingularPointError);
  EXPECT_DOUBLE_EQ(inv_c_derivative(0.0), 1.0);
  EXPECT_GT(inv_c_derivative(kInvE - 1e-6), 1e2);
  EXPECT_THROW(inv_c_derivative(kInvE), SingularPointError);
}

TEST(Derivatives, MatchCentralDifferences) {
  const double h = 1e-6;
  double prev = 0.0;
  for (int i = 1; i < 20; ++i) {
    const double rho = kInvE * i / 20.0;
    const double fd = (inv_c(rho + h).value - inv_c(rho - h).value) / (2 * h);
    EXPECT_NEAR(inv_c_derivative(rho) / fd, 1.0, 1e-4);
    EXPECT_GT(inv_c_derivative(rho), prev);
    prev = inv_c_derivative(rho);
  }
  for (std::uint32_t k : {1u, 2u, 4u}) {
    for (int i = 1; i < 20; ++i) {
      const double rho = singularity_discrete(k) * i / 20.0;
      const double fd = (cond_limit_discrete(k, rho + h) - cond_limit_discrete(k, rho - h)) / (2 * h);
      EXPECT_NEAR(cond_limit_derivative_discrete(k, rho) / fd, 1.0, 1e-4) << "k=" << k << " i=" << i;
    }
  }
}

TEST(Scaling, SpecExamples) {
  const std::vector<std::uint32_t> ks = {0, 1000, 10000};
  const auto rows = scaling_table(ks, 0.3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].scaled_singularity, 1.0);
  EXPECT_LT(std::abs(rows[1].scaled_singularity - kInvE), 2e-4);
  EXPECT_LT(std::abs(rows[2].scaled_inverse - inv_c(0.3).value), 1e-3);
}

// (k+1) rho*_k = (1 - 1/(k+1))^k equals 1/2 at k = 1 and falls to 1/e, so the
// sequence decreases and stays above its limit.
TEST(Scaling, ScaledSingularityDecreasesTowardInvE) {
  double prev = 2.0;
  for (std::uint32_t k = 1; k <= 10000; k = k < 100 ? k + 1 : k * 11 / 10) {
    const double scaled = (k + 1.0) * singularity_discrete(k);
    EXPECT_NEAR(scaled, std::pow(1.0 - 1.0 / (k + 1.0), k), 1e-12);
    EXPECT_LT(scaled, prev) << "k=" << k;
    EXPECT_GT(scaled, kInvE);
    prev = scaled;
  }
}

TEST(PriorBounds, SpecExamplesAndDominance) {
  const auto c = prior_bounds_continuous();
  EXPECT_NEAR(c.fernandez_procacci_scoppola, 0.29289, 1e-5);
  EXPECT_NEAR(c.ruelle, 0.18394, 1e-5);
  EXPECT_DOUBLE_EQ(prior_bounds(1).dobrushin, 4.0 / 27.0);
  EXPECT_DOUBLE_EQ(prior_bounds(1).fernandez_procacci, 1.0 / (2.0 + 3.0));
  EXPECT_THROW(prior_bounds(0), DomainError);
  for (std::uint32_t k = 1; k <= 10; ++k) {
    EXPECT_LT(prior_bounds(k).dobrushin, singularity_discrete(k));
    EXPECT_LT(prior_bounds(k).fernandez_procacci, singularity_discrete(k));
  }
  EXPECT_LT(c.ruelle, singularity_continuous());
  EXPECT_LT(c.fernandez_procacci_scoppola, singularity_continuous());
}

}  // namespace
}  // namespace tonks::inverse
