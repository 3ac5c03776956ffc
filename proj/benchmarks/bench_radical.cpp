#include <benchmark/benchmark.h>

#include "randic/families.hpp"
#include "randic/index.hpp"
#include "randic/radical.hpp"

namespace {

void BM_RandicExact(benchmark::State& state) {
  const randic::Graph g = randic::construct_member(randic::make_family_spec(randic::FamilyName::Gamma2, 12, 6));
  for (auto _ : state) benchmark::DoNotOptimize(randic::randic_exact(g));
}
BENCHMARK(BM_RandicExact);

void BM_SignNearTie(benchmark::State& state) {
  const randic::RadicalValue a = randic::RadicalValue::sqrt(2) - randic::RadicalValue::fraction(577, 408);
  for (auto _ : state) benchmark::DoNotOptimize(randic::sign(a));
}
BENCHMARK(BM_SignNearTie);

void BM_ToDecimal(benchmark::State& state) {
  const randic::RadicalValue a = randic::RadicalValue::fraction(11, 3) + randic::RadicalValue::sqrt(6) / 3;
  for (auto _ : state) benchmark::DoNotOptimize(randic::to_decimal(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ToDecimal)->Arg(12)->Arg(60);

}  // namespace
