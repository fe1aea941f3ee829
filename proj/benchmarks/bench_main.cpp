#include <benchmark/benchmark.h>

#include "twocat/algobj.hpp"
#include "twocat/fixtures.hpp"
#include "twocat/kan.hpp"

namespace fx = twocat::fixtures;

static void BM_EnumerateEndofunctors(benchmark::State& state) {
  auto c = fx::chain3();
  for (auto _ : state) {
    auto fs = twocat::enumerate_functors(c, c);
    benchmark::DoNotOptimize(fs);
  }
}
BENCHMARK(BM_EnumerateEndofunctors);

static void BM_CheckMonad(benchmark::State& state) {
  auto m = fx::cA();
  for (auto _ : state) {
    auto r = twocat::check_monad(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CheckMonad);

static void BM_ConstructEm(benchmark::State& state) {
  auto m = fx::clos_c();
  for (auto _ : state) {
    auto a = twocat::construct_em(m);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ConstructEm);

static void BM_ConstructKleisli(benchmark::State& state) {
  auto m = fx::cA();
  for (auto _ : state) {
    auto o = twocat::construct_kleisli(m);
    benchmark::DoNotOptimize(o);
  }
}
BENCHMARK(BM_ConstructKleisli);

static void BM_Codensity(benchmark::State& state) {
  auto x = fx::fix_incl();
  for (auto _ : state) {
    auto e = twocat::codensity(x, false);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_Codensity);

static void BM_CodensityCertified(benchmark::State& state) {
  auto x = fx::fix_incl();
  for (auto _ : state) {
    auto e = twocat::codensity(x, true);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_CodensityCertified);

BENCHMARK_MAIN();
