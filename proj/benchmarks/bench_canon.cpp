#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "randic/canon.hpp"
#include "randic/families.hpp"
#include "randic/graph.hpp"

namespace {

randic::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  randic::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_CanonicalCodeRandom(benchmark::State& state) {
  const randic::Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(randic::canonical_code(g));
}
BENCHMARK(BM_CanonicalCodeRandom)->Arg(8)->Arg(12)->Arg(24)->Arg(48);

void BM_CanonicalCodeCubic(benchmark::State& state) {
  const randic::Graph g = randic::cubic_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(randic::canonical_code(g));
}
BENCHMARK(BM_CanonicalCodeCubic)->Arg(10)->Arg(16)->Arg(30);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const randic::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(randic::parse_graph6(randic::write_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(12)->Arg(64);

}  // namespace
