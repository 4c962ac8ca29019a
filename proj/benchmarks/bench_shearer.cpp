// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "tonks/rng.hpp"
#include "tonks/shearer.hpp"

namespace {

void BM_SampleDiscrete(benchmark::State& state) {
  tonks::SplitMix64 rng(1);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tonks::shearer::sample_discrete_shearer(2, 0.1, n, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleDiscrete)->Arg(100)->Arg(10'000);

void BM_SampleContinuous(benchmark::State& state) {
  tonks::SplitMix64 rng(2);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tonks::shearer::sample_continuous_shearer(0.3, t, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleContinuous)->Arg(100)->Arg(10'000);

void BM_EstimateIntensity(benchmark::State& state) {
  const tonks::shearer::Params params = tonks::shearer::ContinuousParams{0.25, 10.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tonks::shearer::estimate_intensity(params, 1000, tonks::RandomSeed{42}));
  }
}
BENCHMARK(BM_EstimateIntensity)->Unit(benchmark::kMillisecond);

}  // namespace
