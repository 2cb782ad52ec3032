#include <benchmark/benchmark.h>

#include "farey/clustering.hpp"
#include "farey/group_ring.hpp"
#include "farey/numtheory.hpp"
#include "farey/sumsets.hpp"

using namespace farey;

static void BM_SpfSieve(benchmark::State& state) {
  const uint64_t limit = state.range(0);
  for (auto _ : state) {
    SpfTable table(limit);
    benchmark::DoNotOptimize(table.spf(limit));
  }
}
BENCHMARK(BM_SpfSieve)->Arg(1 << 16)->Arg(1 << 20);

static void BM_FqProduct(benchmark::State& state) {
  uint64_t q = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fq_product(q, 360));
    q = q % 500 + 1;
  }
}
BENCHMARK(BM_FqProduct);

static void BM_DenseOracle(benchmark::State& state) {
  const uint64_t q = state.range(0);
  const DenseElement fq = class_sum(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(collapse(dense_multiply(fq, fq)));
  }
}
BENCHMARK(BM_DenseOracle)->Arg(60)->Arg(180);

static void BM_SumsetCount(benchmark::State& state) {
  const uint64_t q = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumset_cardinality(q, 2).cardinality);
  }
}
BENCHMARK(BM_SumsetCount)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_LMeasureSweep(benchmark::State& state) {
  SpfTable table(100000);
  for (auto _ : state) {
    double total = 0.0;
    for (uint64_t a = 1; a <= 100000; ++a) total += l_measure(table.factorize(a));
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_LMeasureSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
