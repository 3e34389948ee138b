#include <benchmark/benchmark.h>

#include "svt/count.hpp"

namespace {

void BM_Diagonal(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto n = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(svt::diagonal(d, n));
}
BENCHMARK(BM_Diagonal)->Args({3, 24})->Args({3, 60})->Args({4, 19})->Args({5, 8})->Args({6, 6})
    ->Unit(benchmark::kMillisecond);

void BM_LatticeDense(benchmark::State& state) {
  const svt::Shape shape(svt::MultiIndex(static_cast<std::size_t>(state.range(0)),
                                         static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(svt::count_lattice_dp(shape));
}
BENCHMARK(BM_LatticeDense)->Args({3, 16})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_CountDirect(benchmark::State& state) {
  const svt::Shape shape(svt::MultiIndex(static_cast<std::size_t>(state.range(0)),
                                         static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(svt::count_direct(shape));
}
BENCHMARK(BM_CountDirect)->Args({3, 8})->Args({3, 16})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_CountBoxSum(benchmark::State& state) {
  const svt::Shape shape(svt::MultiIndex(static_cast<std::size_t>(state.range(0)),
                                         static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(svt::count_box_sum(shape));
}
BENCHMARK(BM_CountBoxSum)->Args({3, 16})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_FContingency(benchmark::State& state) {
  const svt::MultiIndex k(static_cast<std::size_t>(state.range(0)),
                          static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(svt::f_contingency(k));
}
BENCHMARK(BM_FContingency)->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMicrosecond);

}  // namespace
