#include <benchmark/benchmark.h>

#include "heffter/constructions.hpp"
#include "heffter/verifier.hpp"

namespace {

void BM_ConstructT2(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(heffter::construct_t2(n));
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_ConstructT2)->RangeMultiplier(4)->Range(16, 1000)->Complexity();

void BM_CheckAxioms(benchmark::State& state) {
  const auto a = heffter::construct(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(heffter::check_axioms(a));
}
BENCHMARK(BM_CheckAxioms)->Args({15, 2})->Args({15, 225})->Args({101, 101})->Args({301, 2});

void BM_CompatibilitySearch(benchmark::State& state) {
  const auto a = heffter::construct(state.range(0), 2);
  heffter::CompatibilitySearch opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(heffter::find_compatible_orderings(a, opts));
}
BENCHMARK(BM_CompatibilitySearch)->Args({5, 1})->Args({9, 1})->Args({11, 1})->Args({11, 4})->UseRealTime();

}  // namespace
