// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "tonks/exact_eval.hpp"
#include "tonks/inverse_maps.hpp"
#include "tonks/tree_series.hpp"

namespace {

using tonks::Rational;

void BM_DiscretePartitionEval(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Rational rho(1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tonks::exact::discrete_partition_eval(1, n, rho));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiscretePartitionEval)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_DiscreteSmallestRoot(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tonks::exact::discrete_smallest_root(2, n));
}
BENCHMARK(BM_DiscreteSmallestRoot)->Arg(25)->Arg(100)->Arg(200);

void BM_ContinuousPartitionEval(benchmark::State& state) {
  const Rational t(state.range(0) * 2 + 1, 2);
  const Rational rho(1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tonks::exact::continuous_partition_eval(rho, t));
}
BENCHMARK(BM_ContinuousPartitionEval)->Arg(5)->Arg(20)->Arg(50);

void BM_ContinuousSmallestRoot(benchmark::State& state) {
  const Rational t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tonks::exact::continuous_smallest_root(t));
}
BENCHMARK(BM_ContinuousSmallestRoot)->Arg(2)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_InvK(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const double rho = 0.9 * tonks::inverse::singularity_discrete(k);
  for (auto _ : state) benchmark::DoNotOptimize(tonks::inverse::inv_k(k, rho));
}
BENCHMARK(BM_InvK)->Arg(1)->Arg(10)->Arg(1000);

void BM_EnumerateD(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tonks::trees::enumerate_D(tonks::trees::Case::continuum(), n));
}
BENCHMARK(BM_EnumerateD)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
