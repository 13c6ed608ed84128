#include <benchmark/benchmark.h>

#include "heffter/constructions.hpp"
#include "heffter/decomposition.hpp"
#include "heffter/embedding.hpp"

namespace {

void BM_DevelopAndPartition(benchmark::State& state) {
  const auto a = heffter::construct(state.range(0), state.range(1));
  const auto threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    const auto d = heffter::line_decomposition(a, heffter::Axis::rows, threads);
    benchmark::DoNotOptimize(heffter::check_partition(d, threads));
  }
}
BENCHMARK(BM_DevelopAndPartition)->Args({7, 2, 1})->Args({9, 81, 1})->Args({9, 81, 4})->UseRealTime();

void BM_Orthogonality(benchmark::State& state) {
  const auto a = heffter::construct(state.range(0), state.range(1));
  const auto dr = heffter::line_decomposition(a, heffter::Axis::rows);
  const auto dc = heffter::line_decomposition(a, heffter::Axis::cols);
  for (auto _ : state) benchmark::DoNotOptimize(heffter::check_orthogonal(dr, dc));
}
BENCHMARK(BM_Orthogonality)->Args({7, 2})->Args({7, 98});

void BM_TraceFaces(benchmark::State& state) {
  const auto a = heffter::construct(state.range(0), state.range(1));
  const auto dirs = heffter::find_compatible_orderings(a).ordering.value();
  const auto seed = heffter::build_rho0(a, dirs);
  for (auto _ : state) benchmark::DoNotOptimize(heffter::trace_faces(seed));
  state.counters["directed_edges"] = static_cast<double>(a.ctx().v() * (a.ctx().v() - a.ctx().t()));
}
BENCHMARK(BM_TraceFaces)->Args({3, 3})->Args({5, 5})->Args({7, 7})->Args({9, 2});

}  // namespace
