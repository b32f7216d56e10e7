#include <benchmark/benchmark.h>

#include "tgb/branching.hpp"
#include "tgb/random_graph.hpp"

namespace {

constexpr tgb::VertexId kVertices = 100000;
constexpr tgb::Time kTau = 1000;

static void BM_MaxMtTob(benchmark::State& state) {
  const auto m = static_cast<tgb::ArcId>(state.range(0));
  const tgb::TemporalGraph g = tgb::random_temporal_graph(kVertices, m, kTau, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tgb::max_mt_tob(g, 0));
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_MaxMtTob)->RangeMultiplier(2)->Range(125000, 1000000)->Complexity();

static void BM_MaxLdTob(benchmark::State& state) {
  const auto m = static_cast<tgb::ArcId>(state.range(0));
  const tgb::TemporalGraph g = tgb::random_temporal_graph(kVertices, m, kTau, 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tgb::max_ld_st_tob(g, 0, tgb::DistanceKind::LatestDeparture));
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_MaxLdTob)->RangeMultiplier(2)->Range(125000, 1000000)->Complexity();

static void BM_MaxStTob(benchmark::State& state) {
  const auto m = static_cast<tgb::ArcId>(state.range(0));
  const tgb::TemporalGraph g = tgb::random_temporal_graph(kVertices, m, kTau, 44);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tgb::max_ld_st_tob(g, 0, tgb::DistanceKind::ShortestTravelling));
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_MaxStTob)->RangeMultiplier(2)->Range(125000, 1000000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
