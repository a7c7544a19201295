#include <benchmark/benchmark.h>

#include <vector>

#include "lantern/series.hpp"

static void BM_MagnusFreeAlternating(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  // (x1 x2 x1^-1 x2^-1)^2
  const std::vector<lantern::Letter> raw{1, 2, -1, -2, 1, 2, -1, -2};
  const auto w = lantern::Word::reduce(2, raw);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::magnus_free(w, cap));
  }
}
BENCHMARK(BM_MagnusFreeAlternating)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SeriesInverse(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const auto ctx = lantern::free_context(2);
  const auto s = lantern::NcSeries::one(ctx, cap) + lantern::NcSeries::variable(ctx, cap, 0) +
                 lantern::NcSeries::variable(ctx, cap, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::series_inv(s));
  }
}
BENCHMARK(BM_SeriesInverse)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CompletedIdentitySeriesRoute(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lantern::verify_completed_identity(3, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CompletedIdentitySeriesRoute)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
