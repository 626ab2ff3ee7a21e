// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "starkscat/cutoffs.hpp"
#include "starkscat/parabolic.hpp"
#include "starkscat/potential.hpp"

namespace {

void BM_ChiBelow(benchmark::State& state) {
  stark::SmoothCutoff chi(stark::SmoothCutoff::Kind::below, 1.0);
  double t = 0.76;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi(t));
    t = 0.75 + (t + 0.001 - 0.75) * 0.999;  // wander across the window
  }
}
BENCHMARK(BM_ChiBelow);

void BM_BreveF(benchmark::State& state) {
  stark::ConvexRegularizer breve;
  double t = 0.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(breve(t));
    t = 0.8 + (t - 0.8 + 0.003) * 0.98;
  }
}
BENCHMARK(BM_BreveF);

void BM_ToParabolic(benchmark::State& state) {
  stark::CartesianPoint p{3.0, {1.0, 2.0}, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(stark::to_parabolic(p));
    p.x = 3.0 + 0.999 * (p.x - 3.0) + 0.001;
  }
}
BENCHMARK(BM_ToParabolic);

void BM_PotentialStack(benchmark::State& state) {
  const auto q = stark::PotentialModel::coulomb(1.0);
  stark::Vec2 y{1.0, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.gradient(2.0, y, 2));
    benchmark::DoNotOptimize(q.bilaplacian(2.0, y, 2));
  }
}
BENCHMARK(BM_PotentialStack);

}  // namespace

BENCHMARK_MAIN();
