#include <benchmark/benchmark.h>

#include "binmat/canonical.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/oracle.hpp"

namespace {

void BM_count_canonical(benchmark::State& state) {
  const binmat::Dims d(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmat::count_canonical(d));
  }
}
BENCHMARK(BM_count_canonical)
    ->Args({8, 2})
    ->Args({9, 3})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_count_canonical_workers(benchmark::State& state) {
  binmat::EnumConfig cfg(binmat::Dims(9, 4));
  cfg.worker_count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmat::count_canonical(cfg));
  }
}
BENCHMARK(BM_count_canonical_workers)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_count_lambda(benchmark::State& state) {
  const binmat::Dims d(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmat::count_lambda(d));
  }
}
BENCHMARK(BM_count_lambda)
    ->Args({8, 4})
    ->Args({12, 6})
    ->Args({16, 8})
    ->Unit(benchmark::kMillisecond);

void BM_orbit_partition(benchmark::State& state) {
  const binmat::Dims d(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmat::orbit_partition(d).classes.size());
  }
}
BENCHMARK(BM_orbit_partition)
    ->Args({5, 2})
    ->Args({6, 2})
    ->Unit(benchmark::kMillisecond);

void BM_doubly_sort(benchmark::State& state) {
  const binmat::RowTuple t(4, {12, 10, 5, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(binmat::doubly_sort(t));
  }
}
BENCHMARK(BM_doubly_sort);

}  // namespace

BENCHMARK_MAIN();
