// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/tree_series.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "tonks/errors.hpp"
#include "tonks/exact_eval.hpp"
#include "tonks/inverse_maps.hpp"

namespace tonks::trees {
namespace {

void require_tree_size(std::uint32_t n) {
  if (n < 1 || n > kMaxTreeSize) {
    throw SizeLimitError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeSize) +
                         ", got " + std::to_string(n));
  }
}

using Series = std::vector<Rational>;  // truncated power series, index = degree

Series multiply(const Series& a, const Series& b, std::size_t degree) {
  Series out(degree + 1);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// x * sum_s weight(s) A^s / s!, truncated at `degree`.
Series apply_vertex(const Case& c, Kind kind, const Series& a, std::size_t degree) {
  Series sum(degree + 1);
  Series power(degree + 1);
  power[0] = 1;
  Rational s_factorial = 1;
  // A has no constant term, so A^s only reaches degree < `degree` for s < degree.
  for (std::uint32_t s = 0; s < degree; ++s) {
    if (s > 0) {
      power = multiply(power, a, degree);
      s_factorial *= s;
    }
    const Rational w = child_weight(c, kind, s);
    if (sgn(w) == 0) continue;
    for (std::size_t i = 0; i <= degree; ++i) sum[i] += w * power[i] / s_factorial;
  }
  Series shifted(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) shifted[i + 1] = sum[i];
  return shifted;
}

double fixed_point_h(const Case& c, double mu) { return gen_fun_h(c, mu); }

}  // namespace

Rational child_weight(const Case& c, Kind kind, std::uint32_t s) {
  if (c.continuous) {
    if (kind == Kind::kRoot) {
      switch (s) {
        case 0: return Rational(1);
        case 1: return Rational(2);
        case 2: return Rational(1, 2);
        default: return Rational(0);
      }
    }
    return Rational(1) / Rational(factorial(s));
  }
  if (kind == Kind::kRoot) {
    switch (s) {
      case 0: return Rational(1);
      case 1: return Rational(2 * c.k + 1);
      case 2: return Rational(binomial(c.k + 1, 2));
      default: return Rational(0);
    }
  }
  return s <= c.k + 1 ? Rational(binomial(c.k + 1, s)) : Rational(0);
}

int weight_support(const Case& c, Kind kind) {
  if (kind == Kind::kRoot) return 2;
  return c.continuous ? -1 : static_cast<int>(c.k) + 1;
}

double gen_fun_g(const Case& c, double mu) {
  if (!(mu >= 0.0)) throw DomainError("generating functions need mu >= 0");
  if (c.continuous) return 1.0 + 2.0 * mu + mu * mu / 2.0;
  const double k = c.k;
  return 1.0 + (2.0 * k + 1.0) * mu + k * (k + 1.0) / 2.0 * mu * mu;
}

double gen_fun_h(const Case& c, double mu) {
  if (!(mu >= 0.0)) throw DomainError("generating functions need mu >= 0");
  if (c.continuous) return std::exp(mu);
  return std::pow(1.0 + mu, static_cast<double>(c.k) + 1.0);
}

RatioMax ratio_max(const Case& c, Kind kind) {
  if (c.continuous) {
    if (kind == Kind::kRoot) return RatioMax{std::numbers::sqrt2, 1.0 / (2.0 + std::numbers::sqrt2)};
    return RatioMax{1.0, 1.0 / std::numbers::e};
  }
  if (c.k == 0) throw DomainError("discrete ratio maxima need k >= 1");
  const double k = c.k;
  if (kind == Kind::kRoot) {
    // mu / (1 + (2k+1) mu + C mu^2) peaks at mu = 1/sqrt(C), C = k(k+1)/2.
    return RatioMax{std::sqrt(2.0 / (k * (k + 1.0))), 1.0 / (std::sqrt(2.0 * k * (k + 1.0)) + 2.0 * k + 1.0)};
  }
  return RatioMax{1.0 / k, inverse::singularity_discrete(c.k)};
}

FixedPointResult fixed_point_iterate(const Case& c, double rho, const FixedPointOptions& options) {
  if (!(rho >= 0.0)) throw DomainError("fixed-point iteration needs rho >= 0");
  if (!(options.tol > 0.0) || !(options.divergence_threshold > 0.0)) {
    throw DomainError("tolerance and divergence threshold must be positive");
  }
  FixedPointResult result;
  double mu = 0.0;
  for (std::uint64_t iter = 1; iter <= options.max_iter; ++iter) {
    const double next = rho * fixed_point_h(c, mu);
    result.iterations = iter;
    result.last_value = next;
    if (!std::isfinite(next) || next > options.divergence_threshold) {
      result.status = FixedPointStatus::kDiverged;
      return result;
    }
    if (std::abs(next - mu) <= options.tol) {
      // |mu - rho h(mu)| is exactly the step just taken.
      result.status = FixedPointStatus::kConverged;
      result.mu = mu;
      return result;
    }
    mu = next;
  }
  result.status = FixedPointStatus::kIterationCap;
  return result;
}

Rational enumerate_D(const Case& c, std::uint32_t n) {
  require_tree_size(n);
  if (n == 1) return child_weight(c, Kind::kRoot, 0);
  // In a Pruefer sequence every vertex appears deg - 1 times, so child counts
  // (deg for the root 1, deg - 1 otherwise) follow without decoding the tree.
  // Sequences are tallied by degree vector; the exact weights are summed once
  // per distinct vector.
  const std::uint32_t length = n - 2;
  std::vector<std::uint32_t> sequence(length, 0);
  std::unordered_map<std::uint64_t, std::uint64_t> tallies;
  for (;;) {
    std::uint64_t key = 0;
    for (std::uint32_t v : sequence) key += std::uint64_t{1} << (4 * v);
    ++tallies[key];
    std::uint32_t pos = 0;
    while (pos < length && ++sequence[pos] == n) sequence[pos++] = 0;
    if (pos == length) break;
  }
  Rational total = 0;
  for (const auto& [key, count] : tallies) {
    Rational weight = 1;
    for (std::uint32_t v = 0; v < n && sgn(weight) != 0; ++v) {
      const auto occurrences = static_cast<std::uint32_t>((key >> (4 * v)) & 0xF);
      const std::uint32_t degree = occurrences + 1;
      weight *= v == 0 ? child_weight(c, Kind::kRoot, degree) : child_weight(c, Kind::kNonRoot, degree - 1);
    }
    total += weight * Rational(static_cast<unsigned long>(count));
  }
  return total;
}

Rational enumerate_D_recursive(const Case& c, std::uint32_t n) {
  require_tree_size(n);
  const std::size_t degree = n;
  // A = x * sum_s H(s) A^s / s! is the EGF of non-root subtrees; iterating
  // from A = 0 fixes one more coefficient per pass.
  Series a(degree + 1);
  for (std::size_t pass = 0; pass < degree; ++pass) a = apply_vertex(c, Kind::kNonRoot, a, degree);
  const Series rooted = apply_vertex(c, Kind::kRoot, a, degree);
  // n! [x^n] R counts trees with any root label; fixing the root divides by n.
  return rooted[degree] * Rational(factorial(n - 1));
}

double truncated_P(const Case& c, double rho, std::uint32_t N) {
  if (N > kMaxTreeSize) {
    throw SizeLimitError("truncated series supports N <= " + std::to_string(kMaxTreeSize));
  }
  double sum = 0.0;
  double rho_power_over_factorial = 1.0;
  for (std::uint32_t n = 1; n <= N; ++n) {
    rho_power_over_factorial *= rho / n;
    sum += rho_power_over_factorial * to_double(enumerate_D(c, n));
  }
  return sum;
}

double closed_form_P(const Case& c, double rho, QConvention convention) {
  if (!(rho >= 0.0)) throw DomainError("closed-form series needs rho >= 0");
  FixedPointOptions options;
  options.tol = 1e-13;
  options.max_iter = 20'000'000;
  const FixedPointResult fp = fixed_point_iterate(c, rho, options);
  if (fp.status == FixedPointStatus::kDiverged) {
    throw DomainError("fixed point diverges at rho = " + std::to_string(rho));
  }
  // Polynomially slow convergence at the singularity can exhaust the budget;
  // the trajectory is monotone, so its last value is the best estimate.
  const double mu = fp.status == FixedPointStatus::kConverged ? fp.mu : fp.last_value;
  const double q = convention == QConvention::kRhoMu ? rho * mu : mu;
  if (c.continuous) return rho * (1.0 + 2.0 * q + q * q / 2.0);
  const double k = c.k;
  if (rho >= 1.0) throw DomainError("discrete closed form needs rho < 1");
  return rho / (1.0 - rho) * (1.0 + 2.0 * k * q + k * (k + 1.0) / 2.0 * q * q);
}

SeriesReport series_vs_free_energy_report(const Rational& rho, const Rational& t, std::uint32_t N,
                                          double tolerance) {
  if (N < 1) throw DomainError("series report needs N >= 1");
  const double rho_d = to_double(rho);
  const Case continuum = Case::continuum();
  SeriesReport report;
  report.rho = rho_d;
  report.t = to_string(t);
  report.N = N;
  report.tolerance = tolerance;
  report.truncated = truncated_P(continuum, rho_d, N);
  report.truncated_previous = truncated_P(continuum, rho_d, N - 1);
  report.closed_rho_mu = closed_form_P(continuum, rho_d, QConvention::kRhoMu);
  report.closed_mu = closed_form_P(continuum, rho_d, QConvention::kMu);
  report.inv_c = inverse::inv_c(rho_d).value;
  report.exact_density = exact::free_energy_density(exact::ContinuousModel{t}, rho);
  auto close = [&](double v) { return std::abs(v - report.exact_density) <= tolerance; };
  report.truncated_matches_density = close(report.truncated);
  report.closed_rho_mu_matches_density = close(report.closed_rho_mu);
  report.closed_mu_matches_density = close(report.closed_mu);
  report.inv_c_matches_density = close(report.inv_c);
  return report;
}

}  // namespace tonks::trees
