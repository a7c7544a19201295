#include <benchmark/benchmark.h>

#include "lantern/braid.hpp"

static void BM_VerifyLantern(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::verify_lantern(n));
  }
}
BENCHMARK(BM_VerifyLantern)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

static void BM_FullTwist(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::full_twist(n));
  }
}
BENCHMARK(BM_FullTwist)->DenseRange(3, 10)->Unit(benchmark::kMicrosecond);

static void BM_IsCentralFullTwist(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto delta = lantern::full_twist(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::is_central(delta));
  }
}
BENCHMARK(BM_IsCentralFullTwist)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);
