#include <benchmark/benchmark.h>

#include "lantern/invariant_theory.hpp"

static void BM_ParityTable(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::parity_table(g, 4));
  }
}
BENCHMARK(BM_ParityTable)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_GlInvariantsSquare(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lantern::lambda3_power_invariants(g, 2, lantern::InvariantGroup::kGL));
  }
}
BENCHMARK(BM_GlInvariantsSquare)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_DecompositionCheck(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::decomposition_check(g));
  }
}
BENCHMARK(BM_DecompositionCheck)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
