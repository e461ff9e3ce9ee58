#include <benchmark/benchmark.h>

#include "fractal/biased_lift.hpp"
#include "fractal/sparse_paving.hpp"

using namespace fractal;

static void BM_SpikeBuild(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spike(t, {0, static_cast<std::uint32_t>(full_mask(3))}));
}
BENCHMARK(BM_SpikeBuild)->DenseRange(4, 8, 2);

static void BM_SpikeIsomorphism(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Matroid a = spike(t, {0, static_cast<std::uint32_t>(full_mask(3))});
  const Matroid b = spike(t, {static_cast<std::uint32_t>(full_mask(t)), static_cast<std::uint32_t>(full_mask(t) & ~7U)});
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_SpikeIsomorphism)->DenseRange(4, 7, 1);

static void BM_CanonicalSignature(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto sols = collar_solutions(2 * (k + 1) + 6, k);
  const CHFamily f = collar_construct(sols.back(), 2 * (k + 1) + 6, k);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_signature(f));
}
BENCHMARK(BM_CanonicalSignature)->DenseRange(2, 4, 1);

static void BM_CensusPk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_pk(n, 3));
}
BENCHMARK(BM_CensusPk)->DenseRange(8, 16, 4);

static void BM_SpExcludedMinors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sp_excluded_minors(n, 3));
}
BENCHMARK(BM_SpExcludedMinors)->DenseRange(8, 11, 1)->Unit(benchmark::kMillisecond);

static void BM_SkCatalog(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SkCatalog(n, 2).classes().size());
}
BENCHMARK(BM_SkCatalog)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_StrataCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_sk_strata(n, 3));
}
BENCHMARK(BM_StrataCount)->DenseRange(12, 24, 6);

BENCHMARK_MAIN();
