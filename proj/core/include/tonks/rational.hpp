// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tonks {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every exact evaluation in the library goes through this type.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "1e-3".
/// Decimals convert exactly through powers of ten, never through binary floats.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Prefer this to mpq_class(num, den), which does not
/// reduce; gmp arithmetic assumes canonical operands.
Rational ratio(const BigInt& num, const BigInt& den);

/// Canonical "p/q" form; integers print as "p/1" so the format is uniform.
std::string to_string(const Rational& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double value);

double to_double(const Rational& value);

/// Natural logarithm of a positive rational, evaluated as
/// log(numerator) - log(denominator) with a 128-bit mantissa so that values
/// with thousands of digits neither overflow nor lose relative accuracy.
/// Throws DomainError for non-positive input.
double log_rational(const Rational& value);

Rational floor_rational(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

}  // namespace tonks
