// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "tonks/cluster.hpp"
#include "tonks/rng.hpp"

namespace {

void BM_PenroseCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tonks::SplitMix64 rng(7);
  const auto config = tonks::cluster::random_configuration(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tonks::cluster::check_penrose_identity(config));
}
BENCHMARK(BM_PenroseCheck)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

void BM_UrsellBruteforce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tonks::SplitMix64 rng(11);
  const auto graph = tonks::cluster::build_cluster(tonks::cluster::random_configuration(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(tonks::cluster::ursell_bruteforce(graph));
}
BENCHMARK(BM_UrsellBruteforce)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

}  // namespace
