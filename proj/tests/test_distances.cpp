#include <algorithm>

#include <gtest/gtest.h>

#include "tgb/distances.hpp"
#include "tgb/oracle.hpp"
#include "tgb/random_graph.hpp"
#include "tgb/static_expansion.hpp"
#include "tgb/tg_format.hpp"

namespace tgb {
namespace {

TemporalGraph load(const std::string& name) {
  return read_tg_file(std::string(TGB_DATA_DIR) + "/" + name);
}

Dist value_of(const TemporalGraph& g, const DistanceVector& d, const std::string& v) {
  return d[g.require_vertex(v)];
}

TEST(SingleSource, EarliestArrivalOnFixture) {
  const TemporalGraph g = load("g1.tg");
  const DistanceVector ea = single_source(g, g.require_vertex("1"),
                                          DistanceKind::EarliestArrival);
  EXPECT_EQ(value_of(g, ea, "1"), 0);
  EXPECT_EQ(value_of(g, ea, "2"), 5);
  EXPECT_EQ(value_of(g, ea, "3"), 4);
  EXPECT_EQ(value_of(g, ea, "4"), 2);
  EXPECT_EQ(value_of(g, ea, "5"), 4);
}

TEST(SingleSource, FixtureOptimaAcrossKinds) {
  const TemporalGraph g = load("g1.tg");
  const VertexId root = g.require_vertex("1");
  const VertexId three = g.require_vertex("3");
  EXPECT_EQ(single_source(g, root, DistanceKind::FastestTime)[three], 3);
  EXPECT_EQ(single_source(g, root, DistanceKind::MinimumWaiting)[three], 0);
  EXPECT_EQ(single_source(g, root, DistanceKind::LatestDeparture)[three], 6);
  EXPECT_EQ(single_source(g, root, DistanceKind::MinimumTransfers)[three], 2);
  EXPECT_EQ(single_source(g, root, DistanceKind::ShortestTravelling)[three], 2);
  EXPECT_EQ(value_of(g, single_source(g, root, DistanceKind::ShortestTravelling), "5"), 2);
  EXPECT_EQ(value_of(g, single_source(g, root, DistanceKind::LatestDeparture), "4"), 6);
}

TEST(SingleSource, LatestDepartureRootConvention) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 10, 5, seed);
    const DistanceVector ld = single_source(g, 0, DistanceKind::LatestDeparture);
    EXPECT_EQ(ld[0], g.lifetime() + 1);
  }
}

TEST(SingleSource, UnreachableIsInfinity) {
  const TemporalGraph g({"a", "b", "z"}, {{0, 1, 1, 1}}, 1);
  for (DistanceKind kind : kAllDistanceKinds) {
    EXPECT_EQ(single_source(g, 0, kind)[2], kUnreachable) << to_string(kind);
  }
}

TEST(SingleSource, WaitingOptimumCanNeedANonPathWalk) {
  // r->x (1,1); detour x->z (1,5), z->x (5,9); x->y (9,9). The path waits 8
  // at x, the detour walk waits 0.
  const TemporalGraph g({"r", "x", "z", "y"},
                        {{0, 1, 1, 1}, {1, 2, 1, 5}, {2, 1, 5, 9}, {1, 3, 9, 9}}, 9);
  const DistanceVector mw = single_source(g, 0, DistanceKind::MinimumWaiting);
  EXPECT_EQ(mw[3], 0);
  // The trail-based oracle sees it too; plain path enumeration would not.
  EXPECT_EQ(oracle_single_source(g, 0, DistanceKind::MinimumWaiting)[3], 0);
  Dist best_path_wait = kUnreachable;
  for (const TemporalWalk& p : enumerate_temporal_paths(g, 0, 3)) {
    best_path_wait = std::min(best_path_wait,
                              walk_measure(g, p, DistanceKind::MinimumWaiting));
  }
  EXPECT_EQ(best_path_wait, 8);
}

TEST(SingleSourceEad, EarliestArrivalKindIsIdentity) {
  const TemporalGraph g = load("g1.tg");
  const DistanceWithEad both =
      single_source_with_ead(g, g.require_vertex("1"), DistanceKind::EarliestArrival);
  EXPECT_EQ(both.dist.value, both.ead.arrival);
}

TEST(SingleSourceEad, FastestTimeRefinementOnSplitFixture) {
  const TemporalGraph g = load("split_ftmw.tg");
  const EadVector ead =
      single_source_ead(g, g.require_vertex("r"), DistanceKind::FastestTime);
  // (r,v,1,1) realizes FT(r,v)=0 arriving at 1, although the FT-optimal walk
  // to y passes v at time 2.
  EXPECT_EQ(ead[g.require_vertex("v")], 1);
  EXPECT_EQ(ead[g.require_vertex("y")], 2);
}

TEST(SingleSourceEad, MinimumTransfersOnFixture) {
  const TemporalGraph g = load("g1.tg");
  const EadVector ead =
      single_source_ead(g, g.require_vertex("1"), DistanceKind::MinimumTransfers);
  EXPECT_EQ(ead[g.require_vertex("3")], 9);
  EXPECT_EQ(ead[g.require_vertex("4")], 2);
}

TEST(SingleSourceEad, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 11, 5, 4000 + seed);
    for (DistanceKind kind : kAllDistanceKinds) {
      const DistanceWithEad got = single_source_with_ead(g, 0, kind);
      const EadVector want = oracle_single_source_ead(g, 0, kind);
      EXPECT_EQ(got.ead.arrival, want.arrival)
          << to_string(kind) << " seed " << seed;
    }
  }
}

TEST(Enumeration, TrivialWhenEndpointsCoincide) {
  const TemporalGraph g = load("g1.tg");
  const auto paths = enumerate_temporal_paths(g, 0, 0);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(paths[0].trivial());
}

TEST(Enumeration, UniquePathOnChainFixture) {
  const TemporalGraph g = load("chain_mtld.tg");
  const auto paths =
      enumerate_temporal_paths(g, g.require_vertex("r"), g.require_vertex("y"));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].arc_ids, (std::vector<ArcId>{0, 1, 2}));
}

TEST(Enumeration, FixtureContainsTheFourNamedWalks) {
  const TemporalGraph g = load("g1.tg");
  const auto paths =
      enumerate_temporal_paths(g, g.require_vertex("1"), g.require_vertex("3"));
  auto contains = [&](std::vector<ArcId> ids) {
    return std::any_of(paths.begin(), paths.end(),
                       [&](const TemporalWalk& w) { return w.arc_ids == ids; });
  };
  EXPECT_TRUE(contains({1, 4, 6}));   // zero-wait early walk
  EXPECT_TRUE(contains({0, 9, 11}));  // fastest walk
  EXPECT_TRUE(contains({0, 8}));      // latest departure / shortest travelling
  EXPECT_TRUE(contains({3, 11}));     // fewest transfers
}

TEST(Enumeration, OverflowRaises) {
  const TemporalGraph g = load("g1.tg");
  EnumerationOptions options;
  options.max_walks = 2;
  EXPECT_THROW(
      enumerate_temporal_paths(g, g.require_vertex("1"), g.require_vertex("3"), options),
      OracleOverflowError);
}

TEST(PrefixOptimal, TrivialWalkAlwaysIs) {
  const TemporalGraph g = load("g1.tg");
  for (DistanceKind kind : kAllDistanceKinds) {
    EXPECT_TRUE(is_prefix_optimal(g, 0, {0, {}}, kind));
  }
}

TEST(PrefixOptimal, ChainFixtureMinimumTransfers) {
  const TemporalGraph g = load("chain_mtld.tg");
  const VertexId r = g.require_vertex("r");
  // Direct hop to x realizes MT(r,x)=1.
  EXPECT_TRUE(is_prefix_optimal(g, r, {r, {3}}, DistanceKind::MinimumTransfers));
  // The unique path to y fails at its x-prefix of length 2.
  EXPECT_FALSE(is_prefix_optimal(g, r, {r, {0, 1, 2}}, DistanceKind::MinimumTransfers));
  EXPECT_FALSE(is_prefix_optimal(g, r, {r, {0, 1, 2}}, DistanceKind::LatestDeparture));
}

TEST(PrefixOptimal, ChainFixtureShortestTravelling) {
  const TemporalGraph g = load("chain_st.tg");
  const VertexId r = g.require_vertex("r");
  EXPECT_FALSE(is_prefix_optimal(g, r, {r, {0, 1, 2}}, DistanceKind::ShortestTravelling));
  EXPECT_TRUE(is_prefix_optimal(g, r, {r, {3}}, DistanceKind::ShortestTravelling));
}

TEST(EadPrefixOptimal, SplitFixtureFastestTime) {
  const TemporalGraph g = load("split_ftmw.tg");
  const VertexId r = g.require_vertex("r");
  const TemporalWalk late{r, {1, 3}};  // (r,v,2,2), (v,y,2,2)
  EXPECT_TRUE(is_prefix_optimal(g, r, late, DistanceKind::FastestTime));
  EXPECT_FALSE(is_ead_prefix_optimal(g, r, late, DistanceKind::FastestTime));
}

TEST(OracleEquivalence, RandomGraphsAllKinds) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 12, 5, 5000 + seed);
    for (DistanceKind kind : kAllDistanceKinds) {
      EXPECT_EQ(single_source(g, 0, kind).value,
                oracle_single_source(g, 0, kind).value)
          << to_string(kind) << " seed " << seed;
    }
  }
}

TEST(Duality, ReverseSwapsEarliestArrivalAndLatestDeparture) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 12, 5, 6000 + seed);
    const TemporalGraph rev = reverse(g);
    const Time tau = g.lifetime();
    const VertexId r = 0;
    const DistanceVector ld_rev = single_source(rev, r, DistanceKind::LatestDeparture);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Dist ea_to_root = single_source(g, v, DistanceKind::EarliestArrival)[r];
      if (v == r) continue;
      if (ea_to_root == kUnreachable) {
        EXPECT_EQ(ld_rev[v], kUnreachable);
      } else {
        EXPECT_EQ(ea_to_root, tau + 1 - ld_rev[v]);
      }
    }
    for (DistanceKind kind : {DistanceKind::FastestTime, DistanceKind::MinimumTransfers,
                              DistanceKind::MinimumWaiting,
                              DistanceKind::ShortestTravelling}) {
      const DistanceVector to_root_rev = single_source(rev, r, kind);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == r) continue;
        EXPECT_EQ(single_source(g, v, kind)[r], to_root_rev[v]) << to_string(kind);
      }
    }
  }
}

TEST(StaticExpansionCrossCheck, TransfersAndTravellingValues) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 12, 5, 7000 + seed);
    const StaticExpansion se = static_expansion(g);
    const ExpansionPaths mt_paths =
        expansion_dijkstra(se, 0, [](const TemporalArc&) { return Dist{1}; }, g);
    const ExpansionPaths st_paths = expansion_dijkstra(
        se, 0, [](const TemporalArc& a) { return static_cast<Dist>(a.elapsed()); }, g);
    const DistanceVector mt = single_source(g, 0, DistanceKind::MinimumTransfers);
    const DistanceVector st = single_source(g, 0, DistanceKind::ShortestTravelling);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(mt_paths.vertex_distance(se, v), mt[v]) << "seed " << seed;
      EXPECT_EQ(st_paths.vertex_distance(se, v), st[v]) << "seed " << seed;
    }
  }
}

TEST(Monotonicity, DistancesAlongPrefixOptimalPaths) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 12, 5, 8000 + seed);
    for (DistanceKind kind : {DistanceKind::MinimumTransfers,
                              DistanceKind::LatestDeparture,
                              DistanceKind::ShortestTravelling}) {
      const DistanceVector dist = single_source(g, 0, kind);
      for (VertexId v = 1; v < g.vertex_count(); ++v) {
        for (const TemporalWalk& p : enumerate_temporal_paths(g, 0, v)) {
          if (!is_prefix_optimal(g, dist, p) || p.length() < 2) continue;
          ++checked;
          // Hop-by-hop distances of the intermediate endpoints (the root's
          // conventional LD value stays out of the comparison).
          for (std::size_t i = 1; i < p.length(); ++i) {
            const Dist before = dist[g.arc(p.arc_ids[i - 1]).head];
            const Dist after = dist[g.arc(p.arc_ids[i]).head];
            if (kind == DistanceKind::MinimumTransfers) {
              EXPECT_LT(before, after);
            } else {
              EXPECT_LE(before, after);
            }
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace tgb
