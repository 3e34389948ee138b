#include <benchmark/benchmark.h>

#include "svt/asymptotics.hpp"
#include "svt/holonomic.hpp"

namespace {

const svt::BigSequence kSeed(1, {1, 6, 37, 240, 1621});

void BM_ExtendC3(benchmark::State& state) {
  const auto rec = svt::c3_recurrence();
  for (auto _ : state) benchmark::DoNotOptimize(svt::extend(rec, kSeed, state.range(0)));
}
BENCHMARK(BM_ExtendC3)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GuessC3(benchmark::State& state) {
  const auto c3 = svt::extend(svt::c3_recurrence(), kSeed, 60);
  for (auto _ : state) benchmark::DoNotOptimize(svt::guess_recurrence(c3, 5, 7));
}
BENCHMARK(BM_GuessC3)->Unit(benchmark::kMillisecond);

void BM_EstimateGrowth(benchmark::State& state) {
  const auto c3 = svt::extend(svt::c3_recurrence(), kSeed, 200);
  for (auto _ : state) benchmark::DoNotOptimize(svt::estimate_growth(c3));
}
BENCHMARK(BM_EstimateGrowth)->Unit(benchmark::kMillisecond);

void BM_Subdominance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(svt::subdominance_demo(1, 300));
}
BENCHMARK(BM_Subdominance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
