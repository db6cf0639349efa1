// Serial reference vs OpenMP kernels.  Thread counts are benchmark arguments;
// on a single-core machine the parallel rows only measure overhead.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hat/census.hpp"
#include "hat/paths.hpp"

namespace {

const hat::Graph& bench_graph() {
  static const hat::Graph g = hat::build_even(hat::even_params(8, 68, 19, 34)).graph;
  return g;
}

void BM_CyclesSerial(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hat::enumerate_cycles_serial(bench_graph(), len));
}
BENCHMARK(BM_CyclesSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CyclesParallel(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hat::enumerate_cycles(bench_graph(), len));
  state.counters["threads"] = static_cast<double>(state.range(1));
}
BENCHMARK(BM_CyclesParallel)->ArgsProduct({{6, 8}, {1, 2, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CensusSweep(benchmark::State& state) {
  hat::CensusConfig cfg;
  cfg.max_m = 8;
  cfg.max_n = 30;
  cfg.verify = true;
  cfg.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hat::census_run(cfg));
  state.counters["jobs"] = static_cast<double>(cfg.jobs);
}
BENCHMARK(BM_CensusSweep)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
