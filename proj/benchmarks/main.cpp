// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

// Own main: the distro libbenchmark_main.a ships LTO objects from another gcc.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
