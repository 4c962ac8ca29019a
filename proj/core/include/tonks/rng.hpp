// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>

namespace tonks {

struct RandomSeed {
  std::uint64_t master = 0;
};

/// SplitMix64 (Steele, Lea, Flood). Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Stateless 64-bit finaliser used to derive independent streams.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Generator for replicate `index` under `seed`: a pure function of both,
/// so replicate r sees the same stream however replicates are scheduled.
SplitMix64 replicate_stream(RandomSeed seed, std::uint64_t index) noexcept;

}  // namespace tonks
