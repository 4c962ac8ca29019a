// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks/rng.hpp"

namespace tonks {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SplitMix64::result_type SplitMix64::operator()() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

SplitMix64 replicate_stream(RandomSeed seed, std::uint64_t index) noexcept {
  return SplitMix64(mix64(seed.master ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

}  // namespace tonks
