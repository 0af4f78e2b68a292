// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "polyadica/congruence.hpp"
#include "polyadica/diophantine.hpp"

namespace {

using namespace polyadica;

PowerSumInstance cubes() { return {builtin_exotic_32(), 2, 0, 1}; }

void BM_SearchParallel(benchmark::State& state) {
  const auto inst = cubes();
  SearchOptions opts{0, state.range(0), false, 0};
  for (auto _ : state) benchmark::DoNotOptimize(search(inst, opts));
}
BENCHMARK(BM_SearchParallel)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SearchReference(benchmark::State& state) {
  const auto inst = cubes();
  SearchOptions opts{0, state.range(0), false, 0};
  for (auto _ : state) benchmark::DoNotOptimize(search_reference(inst, opts));
}
BENCHMARK(BM_SearchReference)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ClassTableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(congruence::class_table(state.range(0)));
}
BENCHMARK(BM_ClassTableParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ClassTableReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(congruence::class_table_reference(state.range(0)));
}
BENCHMARK(BM_ClassTableReference)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
