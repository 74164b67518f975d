// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "cremona/generators.hpp"
#include "cremona/hypgraph.hpp"

namespace {

void BM_DeltaSerial(benchmark::State& state) {
  const auto metric =
      cremona::graphs::grid(static_cast<std::size_t>(state.range(0))).metric();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cremona::four_point_delta_serial(metric));
  }
}

void BM_DeltaParallel(benchmark::State& state) {
  const auto metric =
      cremona::graphs::grid(static_cast<std::size_t>(state.range(0))).metric();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cremona::four_point_delta(metric));
  }
}

void BM_FlatSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cremona::flat_growth_serial(static_cast<int>(state.range(0))));
  }
}

void BM_FlatParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cremona::flat_growth(static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_DeltaSerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaParallel)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FlatSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlatParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
