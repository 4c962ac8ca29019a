// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "json.hpp"
#include "tonks/errors.hpp"

namespace tonks {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coefficients_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::shifted_power(const Rational& shift, unsigned power) {
  std::vector<Rational> coeffs(power + 1);
  Rational shift_power = 1;
  // (x + a)^p = sum_i C(p, i) a^{p-i} x^i; walk i downward so a's power grows.
  for (unsigned i = power + 1; i-- > 0;) {
    coeffs[i] = Rational(binomial(power, i)) * shift_power;
    shift_power *= shift;
  }
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Rational> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coefficients_.empty()) return {};
  std::vector<Rational> a(coefficients_.size() + 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    a[i + 1] = coefficients_[i] / static_cast<unsigned long>(i + 1);
  }
  return Polynomial(std::move(a));
}

Polynomial Polynomial::reflected() const {
  Polynomial r = *this;
  for (std::size_t i = 1; i < r.coefficients_.size(); i += 2) r.coefficients_[i] = -r.coefficients_[i];
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> product(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(product));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& dividend,
                                                     const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients_;
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational& lead = divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coefficients_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  for (;;) {
    Polynomial r = Polynomial::divide(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Only signs matter; rescaling to a unit leading coefficient keeps the
    // rational entries from growing without changing any sign pattern.
    Rational scale = -1 / abs(r.leading());
    chain_.push_back(r * scale);
  }
}

int SturmSequence::sign_variations(const Rational& x) const {
  int variations = 0;
  int previous = 0;
  for (const auto& q : chain_) {
    int s = sgn(q.evaluate(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return sign_variations(lo) - sign_variations(hi);
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational max_ratio = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coefficient(static_cast<std::size_t>(i))) / lead;
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return 1 + max_ratio;
}

std::string to_json(const Polynomial& p) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& c : p.coefficients()) array.push_back(to_string(c));
  return array.dump();
}

Polynomial polynomial_from_json(std::string_view json) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!parsed.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  for (const auto& entry : parsed) {
    if (!entry.is_string()) throw ParseError("polynomial coefficients must be \"p/q\" strings");
    coeffs.push_back(parse_rational(entry.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace tonks
