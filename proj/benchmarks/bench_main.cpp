#include "knotguts/diagram.hpp"
#include "knotguts/jones.hpp"
#include "knotguts/montesinos.hpp"
#include "knotguts/notation.hpp"
#include "knotguts/polyhedra.hpp"
#include "knotguts/states.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace knotguts;

namespace {

// Closure of (s1^3 s2^3)^k on three strands: 6k crossings.
LinkDiagram braid_closure(int k) {
  std::string w = "B3:";
  for (int i = 0; i < k; ++i) w += " s1^3 s2^3";
  return LinkDiagram::from_braid(parse_braid(w));
}

void BM_SkeinBracket(benchmark::State& state) {
  const auto d = braid_closure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, BracketOptions{64}));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_SkeinBracket)->DenseRange(1, 4);

void BM_StateSumBracket(benchmark::State& state) {
  const auto d = braid_closure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(state_sum_bracket(d));
  state.SetLabel(std::to_string(d.crossing_count()) + " crossings");
}
BENCHMARK(BM_StateSumBracket)->DenseRange(1, 3);

void BM_TwistRegions(benchmark::State& state) {
  const auto d = braid_closure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(twist_regions(d));
}
BENCHMARK(BM_TwistRegions)->Range(2, 64);

void BM_GutsInterval(benchmark::State& state) {
  const auto d = braid_closure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(guts_interval(d));
}
BENCHMARK(BM_GutsInterval)->Range(2, 64);

void BM_MontesinosNormalize(benchmark::State& state) {
  const auto v = parse_montesinos("M(7/3, -5/2, 1/5, 2/7, -3/4, 5/3, -11/4, 1/9)");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(v));
}
BENCHMARK(BM_MontesinosNormalize);

}  // namespace

BENCHMARK_MAIN();
