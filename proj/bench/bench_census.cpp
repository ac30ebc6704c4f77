// Serial oracle against the parallel forward census on the same queries.

#include <benchmark/benchmark.h>

#include "polycensus/census.hpp"

using namespace polycensus;

namespace {

CountQuery quartic(long long H) { return CountQuery{4, Int(H), true, Variant::Total, 0, 0}; }

void BM_Oracle(benchmark::State& state) {
  const CountQuery q = quartic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_bruteforce(q).count);
}

void BM_Forward(benchmark::State& state) {
  const CountQuery q = quartic(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_forward(q, workers).count);
}

// Large enough that only the forward census is practical.
void BM_ForwardSextic(benchmark::State& state) {
  const CountQuery q{6, Int(state.range(0)), true, Variant::Total, 0, 0};
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_forward(q, workers).count);
}

}  // namespace

BENCHMARK(BM_Oracle)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Forward)->ArgsProduct({{4, 8, 12}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ForwardSextic)->ArgsProduct({{40}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
