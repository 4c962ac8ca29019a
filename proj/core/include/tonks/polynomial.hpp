// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tonks/rational.hpp"

namespace tonks {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. The coefficient list never carries trailing zeros; the zero
/// polynomial has an empty list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// (x + shift)^power, expanded.
  static Polynomial shifted_power(const Rational& shift, unsigned power);

  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept {
    return coefficients_;
  }
  /// Coefficient of x^i; zero beyond the degree.
  [[nodiscard]] Rational coefficient(std::size_t i) const;
  [[nodiscard]] const Rational& leading() const { return coefficients_.back(); }

  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] double evaluate(double x) const;

  [[nodiscard]] Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  [[nodiscard]] Polynomial antiderivative() const;
  /// p(-x); maps the activity polynomial Z(z) to rho -> Z(-rho).
  [[nodiscard]] Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  /// Quotient and remainder of exact polynomial division; divisor nonzero.
  static std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend,
                                                  const Polynomial& divisor);

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// Coefficients of the grand-canonical partition function in the activity z.
using ActivityPolynomial = Polynomial;

/// Sturm chain p, p', -rem(p, p'), ... used for exact real-root counting.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  /// Number of distinct real roots in the half-open interval (lo, hi].
  [[nodiscard]] int count_roots(const Rational& lo, const Rational& hi) const;

  [[nodiscard]] const std::vector<Polynomial>& chain() const noexcept { return chain_; }

 private:
  [[nodiscard]] int sign_variations(const Rational& x) const;

  std::vector<Polynomial> chain_;
};

/// Bound B such that every real root r satisfies |r| < B (Cauchy).
Rational cauchy_root_bound(const Polynomial& p);

/// JSON array of "p/q" strings, lowest degree first.
std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(std::string_view json);

}  // namespace tonks
