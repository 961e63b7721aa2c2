// Serial reference vs OpenMP build of the solid-torus state graph.
#include <benchmark/benchmark.h>

#include "tight/state_traversal.hpp"

namespace {

void BM_Serial(benchmark::State& state) {
  tight::SolidTorusProblem prob{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    auto g = tight::build_state_graph_serial(prob);
    benchmark::DoNotOptimize(g.tight_count);
  }
  state.counters["states"] = static_cast<double>(tight::catalan(prob.p));
}

void BM_Parallel(benchmark::State& state) {
  tight::SolidTorusProblem prob{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    auto g = tight::build_state_graph_parallel(prob);
    benchmark::DoNotOptimize(g.tight_count);
  }
  state.counters["states"] = static_cast<double>(tight::catalan(prob.p));
}

}  // namespace

BENCHMARK(BM_Serial)->Args({9, 4})->Args({10, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Args({9, 4})->Args({10, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
