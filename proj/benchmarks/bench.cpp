#include <benchmark/benchmark.h>

#include "qwb/enumerate.hpp"
#include "qwb/fixtures.hpp"
#include "qwb/saturation.hpp"
#include "qwb/transform.hpp"

using namespace qwb;

static void BM_KernelStar(benchmark::State& state) {
  auto q = builtin_fixtures().quantale("L3");
  const int n = static_cast<int>(state.range(0));
  Kernel k = kernel_identity(q, n);
  for (int i = 0; i < n * n; ++i) k.entries[i] = i % q->size();
  for (auto _ : state) benchmark::DoNotOptimize(star(k, k));
}
BENCHMARK(BM_KernelStar)->Arg(2)->Arg(4)->Arg(8);

static void BM_Transform(benchmark::State& state) {
  auto q = builtin_fixtures().quantale("L3");
  QModule f = free_module(q, 2);
  Kernel k{q, 2, 2, {1, 2, 0, 1}, Handed::left};
  for (auto _ : state) benchmark::DoNotOptimize(transform(k, f, f));
}
BENCHMARK(BM_Transform);

static void BM_CongruenceEnumeration(benchmark::State& state) {
  const QModule& m = builtin_fixtures().module_named("atom3");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_congruences_module(m));
}
BENCHMARK(BM_CongruenceEnumeration);

static void BM_Rho(benchmark::State& state) {
  auto q = builtin_fixtures().quantale("PS2");
  RelationSpec r = {{0, 1}};
  for (auto _ : state)
    for (Elem a = 0; a < q->size(); ++a)
      benchmark::DoNotOptimize(rho(*q, r, a));
}
BENCHMARK(BM_Rho);

static void BM_EnumerateQuantales(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_quantales(bound));
}
BENCHMARK(BM_EnumerateQuantales)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
