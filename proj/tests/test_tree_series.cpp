// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "tonks/errors.hpp"
#include "tonks/inverse_maps.hpp"
#include "tonks/tree_series.hpp"

namespace tonks::trees {
namespace {

const double kInvE = std::exp(-1.0);

double weighted_sum(const Case& c, Kind kind, double mu) {
  const int support = weight_support(c, kind);
  const int last = support < 0 ? 60 : support;
  double total = 0.0;
  for (int s = last; s >= 0; --s) total = total * mu + to_double(child_weight(c, kind, static_cast<std::uint32_t>(s)));
  return total;
}

TEST(GeneratingFunctions, SpecExamples) {
  EXPECT_EQ(gen_fun_g(Case::continuum(), 0.0), 1.0);
  EXPECT_DOUBLE_EQ(gen_fun_h(Case::discrete(1), 1.0), 4.0);
  EXPECT_DOUBLE_EQ(gen_fun_h(Case::continuum(), 1.0), std::exp(1.0));
  EXPECT_THROW(gen_fun_h(Case::continuum(), -1.0), DomainError);
}

TEST(GeneratingFunctions, MatchWeightSums) {
  for (const Case c : {Case::continuum(), Case::discrete(1), Case::discrete(2), Case::discrete(5)}) {
    for (int i = 0; i < 20; ++i) {
      const double mu = 0.1 * i;
      EXPECT_NEAR(weighted_sum(c, Kind::kRoot, mu), gen_fun_g(c, mu), 1e-12 * (1 + gen_fun_g(c, mu)));
      EXPECT_NEAR(weighted_sum(c, Kind::kNonRoot, mu), gen_fun_h(c, mu), 1e-12 * (1 + gen_fun_h(c, mu)));
    }
  }
}

TEST(RatioMax, SpecExamples) {
  const auto g = ratio_max(Case::continuum(), Kind::kRoot);
  EXPECT_NEAR(g.argmax, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(g.max, 1.0 / (2.0 + std::sqrt(2.0)), 1e-12);
  const auto h = ratio_max(Case::continuum(), Kind::kNonRoot);
  EXPECT_NEAR(h.argmax, 1.0, 1e-12);
  EXPECT_NEAR(h.max, kInvE, 1e-12);
  const auto h1 = ratio_max(Case::discrete(1), Kind::kNonRoot);
  EXPECT_NEAR(h1.argmax, 1.0, 1e-12);
  EXPECT_NEAR(h1.max, 0.25, 1e-12);
  EXPECT_THROW(ratio_max(Case::discrete(0), Kind::kRoot), DomainError);
}

TEST(RatioMax, DiscreteMaximaMatchClosedForms) {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    EXPECT_NEAR(ratio_max(Case::discrete(k), Kind::kNonRoot).max, inverse::singularity_discrete(k), 1e-12);
    const double kk = k;
    const double g_max = 1.0 / (std::sqrt(2 * kk * (kk + 1)) + 2 * kk + 1);
    EXPECT_NEAR(ratio_max(Case::discrete(k), Kind::kRoot).max, g_max, 1e-12) << "k=" << k;
    // Cross-check the maximum against a grid scan of mu / g(mu).
    const auto best = ratio_max(Case::discrete(k), Kind::kRoot);
    for (int i = 1; i < 400; ++i) {
      const double mu = best.argmax * i / 200.0;
      EXPECT_LE(mu / gen_fun_g(Case::discrete(k), mu), best.max + 1e-15);
    }
  }
}

TEST(FixedPoint, SpecExamples) {
  const auto zero = fixed_point_iterate(Case::continuum(), 0.0);
  EXPECT_EQ(zero.status, FixedPointStatus::kConverged);
  EXPECT_EQ(zero.mu, 0.0);
  FixedPointOptions critical;
  critical.tol = 1e-9;
  critical.max_iter = 10'000'000;
  const auto at_e = fixed_point_iterate(Case::continuum(), kInvE, critical);
  EXPECT_EQ(at_e.status, FixedPointStatus::kConverged);
  EXPECT_NEAR(at_e.mu, 1.0, 1e-3);
  EXPECT_EQ(fixed_point_iterate(Case::continuum(), 0.4).status, FixedPointStatus::kDiverged);
  FixedPointOptions tiny;
  tiny.max_iter = 3;
  EXPECT_EQ(fixed_point_iterate(Case::continuum(), 0.3, tiny).status, FixedPointStatus::kIterationCap);
  EXPECT_THROW(fixed_point_iterate(Case::continuum(), -0.1), DomainError);
}

TEST(FixedPoint, ResidualAndInverseAgreement) {
  for (int i = 1; i <= 7; ++i) {
    const double rho = 0.05 * i;
    const auto r = fixed_point_iterate(Case::continuum(), rho);
    ASSERT_EQ(r.status, FixedPointStatus::kConverged);
    EXPECT_LE(std::abs(r.mu - rho * gen_fun_h(Case::continuum(), r.mu)), 1e-10);
    EXPECT_NEAR(r.mu, inverse::inv_c(rho).value, 10 * 1e-10 / (1 - r.mu));
  }
}

TEST(FixedPoint, DivergenceIsMonotoneInRho) {
  for (const Case c : {Case::continuum(), Case::discrete(1), Case::discrete(2)}) {
    bool diverged = false;
    for (int i = 0; i <= 60; ++i) {
      const double rho = 0.01 * i;
      const bool now = fixed_point_iterate(c, rho).status == FixedPointStatus::kDiverged;
      if (diverged) EXPECT_TRUE(now) << "rho=" << rho;
      diverged = diverged || now;
    }
    EXPECT_TRUE(diverged);
  }
}

TEST(EnumerateD, SpecExamples) {
  for (const Case c : {Case::continuum(), Case::discrete(1), Case::discrete(3)}) EXPECT_EQ(enumerate_D(c, 1), 1);
  EXPECT_EQ(enumerate_D(Case::continuum(), 2), 2);
  EXPECT_EQ(enumerate_D(Case::continuum(), 3), Rational(9, 2));
  EXPECT_THROW(enumerate_D(Case::continuum(), 0), SizeLimitError);
  EXPECT_THROW(enumerate_D(Case::continuum(), 10), SizeLimitError);
}

TEST(EnumerateD, PrueferMatchesRecursion) {
  for (const Case c : {Case::continuum(), Case::discrete(1), Case::discrete(2), Case::discrete(3)}) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(enumerate_D(c, n), enumerate_D_recursive(c, n)) << "continuous=" << c.continuous << " k=" << c.k
                                                                 << " n=" << n;
    }
  }
}

TEST(TruncatedP, SpecExamples) {
  EXPECT_DOUBLE_EQ(truncated_P(Case::continuum(), 0.3, 1), 0.3);
  EXPECT_NEAR(truncated_P(Case::continuum(), 0.2, 2), 0.24, 1e-15);
  EXPECT_NEAR(truncated_P(Case::continuum(), 0.2, 3), 0.246, 1e-15);
  EXPECT_THROW(truncated_P(Case::continuum(), 0.2, 10), SizeLimitError);
}

TEST(ClosedFormP, SpecExamples) {
  EXPECT_EQ(closed_form_P(Case::continuum(), 0.0, QConvention::kRhoMu), 0.0);
  EXPECT_EQ(closed_form_P(Case::continuum(), 0.0, QConvention::kMu), 0.0);
  EXPECT_NEAR(closed_form_P(Case::continuum(), kInvE, QConvention::kRhoMu), kInvE * (1 + 2 * kInvE + kInvE * kInvE / 2), 2e-4);
  EXPECT_NEAR(closed_form_P(Case::continuum(), kInvE, QConvention::kMu), 1.28758, 2e-3);
  EXPECT_THROW(closed_form_P(Case::continuum(), 0.5, QConvention::kMu), DomainError);
}

TEST(SeriesReport, ExactDensityMatchesInvC) {
  const auto r = series_vs_free_energy_report(Rational(1, 5), Rational(200), 7);
  EXPECT_EQ(r.t, "200/1");
  EXPECT_NEAR(r.exact_density, 0.258967, 1e-6);
  EXPECT_TRUE(r.inv_c_matches_density);
  EXPECT_FALSE(r.closed_rho_mu_matches_density);
  EXPECT_NEAR(r.truncated_previous, truncated_P(Case::continuum(), 0.2, 6), 1e-15);
}

}  // namespace
}  // namespace tonks::trees
