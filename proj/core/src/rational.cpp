// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "tonks/errors.hpp"

namespace tonks {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      throw ParseError("bad exponent in '" + std::string(text) + "'");
    }
    s = s.substr(0, e);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError("not a decimal: '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational value{BigInt(digits, 10)};
  long scale = exponent - fraction_digits;
  BigInt ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  if (scale >= 0) {
    value *= ten_power;
  } else {
    value /= ten_power;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return parse_decimal(text);
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominatorError("ratio with zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

double to_double(const Rational& value) { return value.get_d(); }

double log_rational(const Rational& value) {
  if (sgn(value) <= 0) throw DomainError("logarithm of a non-positive rational");
  mpfr_t num;
  mpfr_t den;
  mpfr_inits2(128, num, den, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(num, value.get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den, value.get_den_mpz_t(), MPFR_RNDN);
  mpfr_log(num, num, MPFR_RNDN);
  mpfr_log(den, den, MPFR_RNDN);
  mpfr_sub(num, num, den, MPFR_RNDN);
  double result = mpfr_get_d(num, MPFR_RNDN);
  mpfr_clears(num, den, static_cast<mpfr_ptr>(nullptr));
  return result;
}

Rational floor_rational(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), base.get_den_mpz_t(), exponent);
  return result;  // already canonical: gcd(p^e, q^e) = 1
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace tonks
