// Serial reference implementations against their OpenMP counterparts.
#include "dichrom/fractional.hpp"
#include "dichrom/generators.hpp"
#include "dichrom/kernels.hpp"
#include "dichrom/solvers.hpp"
#include "dichrom/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace dichrom;

namespace {

Digraph bench_digraph(int n) { return random_digraph(n, 0.15, 2024); }

void BM_AlphaBranchAndBound(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha(d));
}

void BM_AlphaScan(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_scan(d));
}

void BM_MaximalSetsSearch(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_acyclic_sets(d, 64));
}

void BM_MaximalSetsScan(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_acyclic_sets_scan(d));
}

void BM_SweepSerial(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_orientations_serial(g, SweepParameter::Star));
}

void BM_SweepParallel(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_orientations(g, SweepParameter::Star));
}

}  // namespace

BENCHMARK(BM_AlphaBranchAndBound)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlphaScan)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalSetsSearch)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalSetsScan)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
