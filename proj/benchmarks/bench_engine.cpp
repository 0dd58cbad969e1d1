#include <benchmark/benchmark.h>

#include "singlets/characters.hpp"
#include "singlets/invariant_engine.hpp"
#include "singlets/known_relations.hpp"
#include "singlets/root_system.hpp"
#include "singlets/truncated_series.hpp"

using namespace singlets;

static void BM_HaarDenominator(benchmark::State& state) {
  auto rs = build_root_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(haar_denominator(rs));
}
BENCHMARK(BM_HaarDenominator)->DenseRange(3, 7);

// SU(N) adjoint, n = 8.
static void BM_AdjointDimension(benchmark::State& state) {
  const int group = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_invariant_dimension(group, 8));
}
BENCHMARK(BM_AdjointDimension)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_FullPower(benchmark::State& state) {
  auto chi = adjoint_character(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pow(chi, n));
}
BENCHMARK(BM_FullPower)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_SU3ComponentSequence(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su3_component_sequence(max_n));
}
BENCHMARK(BM_SU3ComponentSequence)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su2_closed_form_series(order));
}
BENCHMARK(BM_ClosedFormSeries)->Arg(50)->Arg(200);
BENCHMARK_MAIN();
