#include <benchmark/benchmark.h>

#include "choosekit/flat.hpp"

using namespace choosekit;

namespace {

const char* kGraphs[] = {"cycle(4)", "K(2,3)", "theta(2,2,4)"};

void BM_Serial(benchmark::State& state) {
  Graph g = build_named(kGraphs[state.range(0)]);
  for (auto _ : state) {
    auto c = enumerate_flat(g, 4, static_cast<int>(state.range(1)), {.parallel = false});
    benchmark::DoNotOptimize(c.stats.leaves);
  }
  state.SetLabel(kGraphs[state.range(0)]);
}

void BM_Parallel(benchmark::State& state) {
  Graph g = build_named(kGraphs[state.range(0)]);
  for (auto _ : state) {
    auto c = enumerate_flat(g, 4, static_cast<int>(state.range(1)), {.workers = static_cast<int>(state.range(2))});
    benchmark::DoNotOptimize(c.stats.leaves);
  }
  state.SetLabel(std::string(kGraphs[state.range(0)]) + " workers=" + std::to_string(state.range(2)));
}

}  // namespace

BENCHMARK(BM_Serial)->Args({0, 8})->Args({1, 7})->Args({2, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)
    ->Args({0, 8, 1})->Args({0, 8, 4})
    ->Args({1, 7, 1})->Args({1, 7, 4})
    ->Args({2, 7, 1})->Args({2, 7, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
