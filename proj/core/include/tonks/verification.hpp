// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tonks/rng.hpp"

/// The acceptance suite: every criterion as a self-contained check that
/// reports pass/fail, a measured margin, and a human-readable detail line.
/// Shared by the `tonks verify` subcommand and the acceptance test binary.
namespace tonks::verification {

struct VerifyOptions {
  RandomSeed seed{42};
  unsigned workers = 1;
  std::uint64_t replicates = 100'000;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Signed slack against the criterion's threshold; negative means failing.
  double margin = 0.0;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<CheckResult(const VerifyOptions&)> run;
};

const std::vector<Criterion>& acceptance_criteria();

std::vector<CheckResult> run_all(const VerifyOptions& options);

/// "PASS [ 3] name  margin=...  detail"
std::string format_line(const CheckResult& result);

}  // namespace tonks::verification
