#include <benchmark/benchmark.h>

#include <random>

#include "cohom/catalog.hpp"

using namespace cohom;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  Matrix m(n, n + 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n + 2; ++c) m(r, c) = make_scalar(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_Decompose(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const ModelPtr g = build_sl(size);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSl(benchmark::State& state) {
  CatalogOptions opts;
  opts.max_chain_rank = 0;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sl(static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_EnumerateSl)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OracleSl4(benchmark::State& state) {
  CatalogOptions opts;
  opts.oracle_probes = 64;
  for (auto _ : state) benchmark::DoNotOptimize(nc_oracle_search(3, 2, opts));
}
BENCHMARK(BM_OracleSl4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
