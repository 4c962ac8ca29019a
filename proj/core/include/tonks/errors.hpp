// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tonks {

/// Argument outside the domain of the requested map or operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A ratio whose denominator evaluated to exactly zero.
class ZeroDenominatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a point where the formula has a pole.
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Brute-force enumeration requested beyond its supported size.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Regions passed to a dependence test are closer than the hard-core radius.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input ("p/q", decimals, CSV, JSON).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tonks
