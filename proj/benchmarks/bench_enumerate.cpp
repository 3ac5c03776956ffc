#include <benchmark/benchmark.h>

#include "randic/enumerate.hpp"
#include "randic/verifier.hpp"

namespace {

void BM_CountConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  std::uint64_t classes = 0;
  for (auto _ : state) classes = randic::count({n, m, std::nullopt, true});
  state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK(BM_CountConnected)->Args({8, 12})->Args({9, 13})->Args({10, 14})->Unit(benchmark::kMillisecond);

void BM_CountCubic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(randic::count({n, 3 * n / 2, 3, true}));
}
BENCHMARK(BM_CountCubic)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExtremalSearch(benchmark::State& state) {
  randic::ExtremalOptions options;
  options.top = 2;
  for (auto _ : state) benchmark::DoNotOptimize(randic::extremal_search(9, 5, options));
}
BENCHMARK(BM_ExtremalSearch)->Unit(benchmark::kMillisecond);

}  // namespace
