// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/exact_eval.hpp"

#include <string>
#include <vector>

#include "tonks/errors.hpp"

namespace tonks::exact {
namespace {

void require_nonnegative(const Rational& value, const char* what) {
  if (sgn(value) < 0) throw DomainError(std::string(what) + " must be nonnegative");
}

// Sign test for "Z(-rho, j) > 0 for every j in 1..n" with rho = a/b.
// Z(j) = N_j / b^(j+k) where N_j = b N_{j-1} - a b^k N_{j-k-1} and
// N_m = b^(m+k) for m in [-k, 0] (Z = 1 on empty blocks).
struct ScaledRecursion {
  std::vector<BigInt> values;  // values[i] = N_{i-k}
  std::uint32_t k;

  ScaledRecursion(std::uint32_t k_, std::uint32_t n, const Rational& rho) : k(k_) {
    const BigInt& a = rho.get_num();
    const BigInt& b = rho.get_den();
    BigInt b_to_k;
    mpz_pow_ui(b_to_k.get_mpz_t(), b.get_mpz_t(), k);
    const BigInt a_b_k = a * b_to_k;
    values.resize(static_cast<std::size_t>(n) + k + 1);
    BigInt power = 1;
    for (std::uint32_t i = 0; i <= k; ++i) {
      values[i] = power;
      power *= b;
    }
    for (std::size_t i = k + 1; i < values.size(); ++i) {
      values[i] = b * values[i - 1] - a_b_k * values[i - k - 1];
    }
  }

  [[nodiscard]] const BigInt& scaled(std::uint32_t j) const { return values[j + k]; }

  [[nodiscard]] bool all_positive(std::uint32_t n) const {
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (sgn(scaled(j)) <= 0) return false;
    }
    return true;
  }
};

bool discrete_prefix_positive(std::uint32_t k, std::uint32_t n, const Rational& rho) {
  return ScaledRecursion(k, n, rho).all_positive(n);
}

}  // namespace

Rational default_root_tolerance() { return Rational(1, 1'000'000'000'000UL); }

ActivityPolynomial discrete_partition_polynomial(std::uint32_t k, std::uint32_t n) {
  std::vector<Rational> coeffs;
  for (long m = 0;; ++m) {
    const long top = static_cast<long>(n) - (m - 1) * static_cast<long>(k);
    if (top < m) break;
    coeffs.emplace_back(binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(m)));
  }
  return ActivityPolynomial(std::move(coeffs));
}

Rational discrete_partition_eval(std::uint32_t k, std::uint32_t n, const Rational& rho) {
  require_nonnegative(rho, "rho");
  return discrete_partition_polynomial(k, n).evaluate(Rational(-rho));
}

Rational discrete_cond_ratio(std::uint32_t k, std::uint32_t n, const Rational& rho) {
  if (n == 0) throw DomainError("conditional ratio needs n >= 1");
  const Rational denominator = discrete_partition_eval(k, n - 1, rho);
  if (sgn(denominator) == 0) {
    throw ZeroDenominatorError("Z(-rho, n-1) vanishes at rho = " + to_string(rho));
  }
  return discrete_partition_eval(k, n, rho) / denominator;
}

RootBracket discrete_smallest_root(std::uint32_t k, std::uint32_t n, const Rational& tol) {
  if (n == 0) throw DomainError("smallest root needs n >= 1");
  if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
  // Z(-1, 1) = 0, so the predicate already fails at rho = 1.
  Rational lo = 0;
  Rational hi = 1;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (discrete_prefix_positive(k, n, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const ScaledRecursion at_hi(k, n, hi);
  return RootBracket{lo, hi, sgn(at_hi.scaled(n)) <= 0};
}

Polynomial continuous_partition_polynomial_in_rho(const Rational& t) {
  require_nonnegative(t, "t");
  std::vector<Rational> coeffs;
  Rational j_factorial = 1;
  for (unsigned long j = 0;; ++j) {
    if (j > 0) j_factorial *= j;
    const Rational base = t - Rational(static_cast<long>(j)) + 1;
    if (j > 0 && sgn(base) <= 0) break;
    Rational term = pow(base, j) / j_factorial;
    coeffs.push_back(j % 2 == 0 ? term : Rational(-term));
  }
  return Polynomial(std::move(coeffs));
}

Rational continuous_partition_eval(const Rational& rho, const Rational& t) {
  require_nonnegative(rho, "rho");
  return continuous_partition_polynomial_in_rho(t).evaluate(rho);
}

Rational continuous_cond_ratio(const Rational& rho, const Rational& s, const Rational& t) {
  require_nonnegative(s, "s");
  const Rational denominator = continuous_partition_eval(rho, t);
  if (sgn(denominator) == 0) {
    throw ZeroDenominatorError("Z(-rho, t) vanishes at rho = " + to_string(rho) + ", t = " + to_string(t));
  }
  return continuous_partition_eval(rho, s + t) / denominator;
}

RootBracket continuous_smallest_root(const Rational& t, const Rational& tol) {
  if (sgn(t) <= 0) throw DomainError("continuous smallest root needs t > 0");
  if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
  const Polynomial p = continuous_partition_polynomial_in_rho(t);
  const SturmSequence sturm(p);
  Rational lo = 0;
  Rational hi = cauchy_root_bound(p);
  if (sturm.count_roots(lo, hi) < 1) {
    throw DomainError("no positive root of Z(-rho, t) for t = " + to_string(t));
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count_roots(Rational(0), mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return RootBracket{lo, hi, sgn(p.evaluate(hi)) <= 0};
}

Rational deletion_contraction_integral(const Rational& rho, const Rational& t, const Rational& s) {
  require_nonnegative(rho, "rho");
  require_nonnegative(t, "t");
  if (sgn(s) < 0 || s >= 1) throw DomainError("deletion-contraction needs 0 <= s < 1");

  // Breakpoints: x in (0, s) where u = t + x - 1 crosses a nonnegative integer.
  std::vector<Rational> cuts{Rational(0)};
  for (long m = 0;; ++m) {
    Rational x = Rational(m) + 1 - t;
    if (x >= s) break;
    if (sgn(x) > 0) cuts.push_back(x);
  }
  cuts.push_back(s);

  Rational total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& x0 = cuts[i];
    const Rational& x1 = cuts[i + 1];
    if (x1 <= x0) continue;
    const Rational mid_u = t + (x0 + x1) / 2 - 1;
    Polynomial integrand;
    if (sgn(mid_u) <= 0) {
      integrand = Polynomial::constant(Rational(1));
    } else {
      // On this piece every term with j - 1 < u is active:
      // (-rho)^j / j! * (x + t - j)^j.
      const unsigned long j_max = floor_rational(mid_u).get_num().get_ui() + 1;
      Rational weight = 1;
      for (unsigned long j = 0; j <= j_max; ++j) {
        if (j > 0) weight *= Rational(-rho) / j;
        integrand += Polynomial::shifted_power(t - Rational(static_cast<long>(j)), static_cast<unsigned>(j)) * weight;
      }
    }
    const Polynomial primitive = integrand.antiderivative();
    total += primitive.evaluate(x1) - primitive.evaluate(x0);
  }
  return total;
}

bool verify_deletion_contraction(const Rational& rho, const Rational& t, const Rational& s) {
  const Rational lhs = continuous_partition_eval(rho, t + s);
  const Rational rhs = continuous_partition_eval(rho, t) - rho * deletion_contraction_integral(rho, t, s);
  return lhs == rhs;
}

double free_energy_density(const DiscreteModel& model, const Rational& rho) {
  if (model.n == 0) throw DomainError("free-energy density needs n >= 1");
  const Rational z = discrete_partition_eval(model.k, model.n, rho);
  if (sgn(z) <= 0) throw DomainError("Z(-rho, n) <= 0; rho is at or beyond the smallest root");
  return -log_rational(z) / static_cast<double>(model.n);
}

double free_energy_density(const ContinuousModel& model, const Rational& rho) {
  if (sgn(model.t) <= 0) throw DomainError("free-energy density needs t > 0");
  const Rational z = continuous_partition_eval(rho, model.t);
  if (sgn(z) <= 0) throw DomainError("Z(-rho, t) <= 0; rho is at or beyond the smallest root");
  return -log_rational(z) / to_double(model.t);
}

}  // namespace tonks::exact
