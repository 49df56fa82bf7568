#include <benchmark/benchmark.h>

#include "residuum/fp_core.hpp"
#include "residuum/residue_classes.hpp"
#include "residuum/search.hpp"

using namespace residuum;

static void BM_SqrtMod(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t a = 1;
  for (auto _ : state) {
    a = a * 7 % p;
    if (legendre_symbol(a, p) != 1) continue;
    benchmark::DoNotOptimize(sqrt_mod(a, p));
  }
}
// 65537 has p - 1 = 2^16, the slow path of Tonelli-Shanks.
BENCHMARK(BM_SqrtMod)->Arg(1000003)->Arg(65537)->Arg(67108859);

static void BM_EnumerateAll(benchmark::State& state) {
  const auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  EnumerateOptions opts;
  opts.naive_cross_check_p = 0;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(ctx, opts));
}
BENCHMARK(BM_EnumerateAll)->Arg(29)->Arg(41)->Unit(benchmark::kMillisecond);

static void BM_GeneratedClasses(benchmark::State& state) {
  const auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generated_classes(ctx));
}
BENCHMARK(BM_GeneratedClasses)->Arg(41)->Arg(97)->Unit(benchmark::kMillisecond);

static void BM_SearchMsos(benchmark::State& state) {
  SearchOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_msos(1, static_cast<std::uint64_t>(state.range(0)), opts));
  }
}
BENCHMARK(BM_SearchMsos)->Args({200, 1})->Args({2000, 1})->Args({2000, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
