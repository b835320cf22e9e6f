// Copyright 2026 The rwa-ast Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "rwa/distributions.hpp"
#include "rwa/rwa_engine.hpp"
#include "rwa/special_functions.hpp"
#include "rwa/transforms.hpp"

namespace {

using namespace rwa;

void BM_AstQuadrature(benchmark::State& state) {
  const IntervalBeta dist(0.5, 3.5, -2.0, 3.0);
  const double z = 0.1 * static_cast<double>(state.range(0)) / 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(ast_quadrature(AstQuery(dist, 2.0, z)).value);
}
BENCHMARK(BM_AstQuadrature)->DenseRange(1, 9, 4);

void BM_AstMomentSeries(benchmark::State& state) {
  const IntervalBeta dist(0.5, 3.5, -2.0, 3.0);
  const double z = 0.1 * static_cast<double>(state.range(0)) / 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(ast_moment_series(AstQuery(dist, 2.0, z)).value);
}
BENCHMARK(BM_AstMomentSeries)->DenseRange(1, 9, 4);

void BM_Hyp2F1(benchmark::State& state) {
  const auto route = state.range(0) == 0 ? Hyp2F1Route::series : Hyp2F1Route::euler_integral;
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1({0.7, 1.3, 2.9, -0.8}, route));
}
BENCHMARK(BM_Hyp2F1)->Arg(0)->Arg(1);

void BM_BetaSample(benchmark::State& state) {
  const IntervalBeta dist(0.5, 3.5, -2.0, 3.0);
  CounterRng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(dist.sample(rng));
}
BENCHMARK(BM_BetaSample);

void BM_SampleRwa(benchmark::State& state) {
  const auto problem = RwaProblem::from_composition(
      CompositionSpec(3, {1}), {IntervalBeta(1.5, 1.5, 0, 1), IntervalBeta(2.5, 2.5, 0, 1)});
  const auto path = state.range(1) == 0 ? WeightPath::order_statistics : WeightPath::dirichlet;
  const CounterRng root(7);
  SamplingOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_rwa(problem, path, root, 100'000, options).data());
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_SampleRwa)->Args({1, 0})->Args({1, 1})->Args({4, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
