#include <benchmark/benchmark.h>

#include "surreal/arithmetic.hpp"
#include "surreal/canonical.hpp"
#include "surreal/ordering.hpp"
#include "surreal/sampler.hpp"

using namespace surreal;

// Every iteration gets a fresh store, otherwise the memo caches answer everything.

static void BM_MulIntegers(benchmark::State& state) {
  const auto n = state.range(0);
  const auto m = state.range(1);
  std::size_t nodes = 0;
  for (auto _ : state) {
    FormStore s;
    FormId p = mul(s, dali(s, Dyadic(n)), dali(s, Dyadic(m)));
    benchmark::DoNotOptimize(p);
    nodes = s.size();
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_MulIntegers)->Args({2, 3})->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_MulFractions(benchmark::State& state) {
  for (auto _ : state) {
    FormStore s;
    FormId p = mul(s, dali(s, Dyadic(7, 4)), dali(s, Dyadic(-5, 2)));
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_MulFractions)->Unit(benchmark::kMillisecond);

static void BM_AddSampled(benchmark::State& state) {
  const auto g = static_cast<Generation>(state.range(0));
  for (auto _ : state) {
    FormStore s;
    FormSampler sampler(s, 42);
    for (int i = 0; i < 50; ++i) {
      FormId x = sampler.any(g).form;
      FormId y = sampler.any(g).form;
      benchmark::DoNotOptimize(add(s, x, y));
    }
  }
}
BENCHMARK(BM_AddSampled)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LeqProducts(benchmark::State& state) {
  for (auto _ : state) {
    FormStore s;
    FormId a = mul(s, dali(s, Dyadic(2)), dali(s, Dyadic(3)));
    FormId b = add(s, dali(s, Dyadic(5)), dali(s, Dyadic(1, 1)));
    s.caches().leq.clear();
    benchmark::DoNotOptimize(leq(s, a, b));
  }
}
BENCHMARK(BM_LeqProducts)->Unit(benchmark::kMillisecond);

static void BM_ValueOf(benchmark::State& state) {
  for (auto _ : state) {
    FormStore s;
    FormId p = mul(s, dali(s, Dyadic(3)), dali(s, Dyadic(3)));
    s.caches().value.clear();
    benchmark::DoNotOptimize(value_of(s, p));
  }
}
BENCHMARK(BM_ValueOf)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
