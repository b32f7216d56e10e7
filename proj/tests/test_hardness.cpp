#include <functional>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"
#include "tgb/hardness.hpp"
#include "tgb/random_graph.hpp"
#include "tgb/tg_format.hpp"

namespace tgb {
namespace {

TemporalGraph load(const std::string& name) {
  return read_tg_file(std::string(TGB_DATA_DIR) + "/" + name);
}

CnfFormula parse_cnf(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

TEST(SatBrute, SingleLiteral) {
  const auto result = sat_brute(parse_cnf("p cnf 1 1\n1 0\n"));
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(*result, std::vector<bool>{true});
}

TEST(SatBrute, Contradiction) {
  EXPECT_FALSE(sat_brute(parse_cnf("p cnf 1 2\n1 0\n-1 0\n")).has_value());
}

TEST(SatBrute, LexicographicallyFirstAssignment) {
  const auto result = sat_brute(parse_cnf("p cnf 3 1\n1 2 -3 0\n"));
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(*result, (std::vector<bool>{false, false, false}));
}

TEST(SatBrute, GuardTriggers) {
  CnfFormula wide;
  wide.variable_count = 25;
  wide.clauses = {{{1, true}}};
  EXPECT_THROW(sat_brute(wide), SizeGuardError);
}

TEST(BruteMaxDtob, SplitFixtureMaximaHaveThreeMembers) {
  const TemporalGraph g = load("split_ftmw.tg");
  const VertexId r = g.require_vertex("r");
  const Branching ft = brute_max_dtob(g, r, DistanceKind::FastestTime);
  EXPECT_EQ(ft.member_count(), 3u);
  EXPECT_TRUE(verify_d_tob(g, ft, DistanceKind::FastestTime).ok());
  const Branching mw = brute_max_dtob(g, r, DistanceKind::MinimumWaiting);
  EXPECT_EQ(mw.member_count(), 3u);
  EXPECT_TRUE(verify_d_tob(g, mw, DistanceKind::MinimumWaiting).ok());
}

TEST(BruteMaxDtob, FixtureHasSpanningFastestBranching) {
  const TemporalGraph g = load("g1.tg");
  const Branching b = brute_max_dtob(g, g.require_vertex("1"), DistanceKind::FastestTime);
  EXPECT_TRUE(b.spanning(g));
  EXPECT_TRUE(verify_d_tob(g, b, DistanceKind::FastestTime).ok());
}

TEST(BruteMaxDtob, AgreesWithPolynomialAlgorithmsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 11, 4, 14000 + seed);
    EXPECT_EQ(brute_max_dtob(g, 0, DistanceKind::MinimumTransfers).member_count(),
              max_mt_tob(g, 0).member_count())
        << seed;
    EXPECT_EQ(brute_max_dtob(g, 0, DistanceKind::LatestDeparture).member_count(),
              max_ld_st_tob(g, 0, DistanceKind::LatestDeparture).member_count())
        << seed;
    EXPECT_EQ(brute_max_dtob(g, 0, DistanceKind::ShortestTravelling).member_count(),
              max_ld_st_tob(g, 0, DistanceKind::ShortestTravelling).member_count())
        << seed;
  }
}

TEST(BruteMaxDtob, GuardTriggers) {
  const TemporalGraph g = random_temporal_graph(12, 10, 3, 1);
  EXPECT_THROW(brute_max_dtob(g, 0, DistanceKind::FastestTime), SizeGuardError);
}

TEST(BruteMinDtoss, ChainFixtureNeedsAllFourArcs) {
  const TemporalGraph g = load("chain_mtld.tg");
  const VertexId r = g.require_vertex("r");
  const auto yes = brute_min_dtoss(g, r, DistanceKind::MinimumTransfers, 4);
  ASSERT_TRUE(yes.has_value());
  EXPECT_EQ(yes->arcs.size(), 4u);
  EXPECT_FALSE(brute_min_dtoss(g, r, DistanceKind::MinimumTransfers, 3).has_value());
}

TEST(BruteMinDtoss, WitnessWalksRealizeAndStayInside) {
  const TemporalGraph g = load("g1.tg");
  const VertexId r = g.require_vertex("1");
  for (DistanceKind kind : kAllDistanceKinds) {
    HardnessOptions options;
    options.max_toss_arcs = 12;
    const auto witness = brute_min_dtoss(g, r, kind, g.arc_count(), options);
    ASSERT_TRUE(witness.has_value()) << to_string(kind);
    const std::set<ArcId> inside(witness->arcs.begin(), witness->arcs.end());
    const DistanceVector dist = single_source(g, r, kind);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const TemporalWalk& w = witness->realizing[static_cast<std::size_t>(v)];
      for (ArcId id : w.arc_ids) EXPECT_TRUE(inside.count(id)) << to_string(kind);
      if (v != r) {
        EXPECT_EQ(walk_measure(g, w, kind), dist[v]) << to_string(kind);
      }
    }
  }
}

TEST(BruteMinDtoss, UnreachableVertexMeansNo) {
  const TemporalGraph g({"r", "a", "z"}, {{0, 1, 1, 1}}, 1);
  EXPECT_FALSE(brute_min_dtoss(g, 0, DistanceKind::EarliestArrival, 3).has_value());
}

TEST(BruteMinDtoss, GuardTriggers) {
  const TemporalGraph g = random_temporal_graph(6, 20, 4, 2);
  EXPECT_THROW(brute_min_dtoss(g, 0, DistanceKind::EarliestArrival, 5), SizeGuardError);
}

TEST(EaToss, FixtureWitnessHasFourArcs) {
  const TemporalGraph g = load("g1.tg");
  const auto witness = ea_toss(g, g.require_vertex("1"));
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->arcs.size(), 4u);
}

TEST(EaToss, NoWhenSomeVertexIsUnreachable) {
  const TemporalGraph g({"r", "a", "z"}, {{0, 1, 1, 1}}, 1);
  EXPECT_FALSE(ea_toss(g, 0).has_value());
}

TEST(EaToss, WitnessSizeIsAlwaysVerticesMinusOne) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TemporalGraph g = random_temporal_graph(6, 14, 5, 15000 + seed);
    const auto witness = ea_toss(g, 0);
    if (witness.has_value()) {
      EXPECT_EQ(witness->arcs.size(), static_cast<std::size_t>(g.vertex_count() - 1));
    }
    // Coincides with the brute decision at k = n - 1.
    HardnessOptions options;
    options.max_toss_arcs = 14;
    EXPECT_EQ(witness.has_value(),
              brute_min_dtoss(g, 0, DistanceKind::EarliestArrival,
                              g.vertex_count() - 1, options)
                  .has_value())
        << seed;
  }
}

TEST(BruteMinDtiss, LatestDepartureMatchesReverseReachability) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TemporalGraph g = random_temporal_graph(5, 10, 4, 16000 + seed);
    const bool reverse_reachable = spanning_tob(reverse(g), 0).spanning(g);
    const auto poly = min_ld_tiss(g, 0);
    EXPECT_EQ(poly.has_value(), reverse_reachable) << seed;
    HardnessOptions options;
    options.max_toss_arcs = 10;
    const auto brute = brute_min_dtiss(g, 0, DistanceKind::LatestDeparture,
                                       g.vertex_count() - 1, options);
    EXPECT_EQ(brute.has_value(), reverse_reachable) << seed;
    if (poly.has_value()) {
      const DistanceVector ld_to_root = [&] {
        DistanceVector to_root{0, DistanceKind::LatestDeparture, {}};
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          to_root.value.push_back(
              single_source(g, v, DistanceKind::LatestDeparture)[0]);
        }
        return to_root;
      }();
      for (VertexId v = 1; v < g.vertex_count(); ++v) {
        const TemporalWalk& w = poly->realizing[static_cast<std::size_t>(v)];
        EXPECT_EQ(w.origin, v);
        EXPECT_EQ(walk_measure(g, w, DistanceKind::LatestDeparture), ld_to_root[v]);
      }
    }
  }
}

TEST(BruteMinDtiss, TransfersEqualReverseToss) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const TemporalGraph g = random_temporal_graph(5, 9, 4, 17000 + seed);
    for (std::int64_t k = 3; k <= 6; ++k) {
      HardnessOptions options;
      options.max_toss_arcs = 9;
      EXPECT_EQ(
          brute_min_dtiss(g, 0, DistanceKind::MinimumTransfers, k, options).has_value(),
          brute_min_dtoss(reverse(g), 0, DistanceKind::MinimumTransfers, k, options)
              .has_value())
          << seed;
    }
  }
}

TEST(BruteMinDtiss, SingleVertexIsFreelyCovered) {
  const TemporalGraph g({"r"}, {}, 1);
  EXPECT_TRUE(brute_min_dtiss(g, 0, DistanceKind::ShortestTravelling, 0).has_value());
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

bool is_simple_digraph(const TemporalGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const TemporalArc& a : g.arcs()) {
    if (!seen.insert({a.tail, a.head}).second) return false;
  }
  return true;
}

TEST(GenFtmw, CountsOnTheThreeVariableClause) {
  const CnfFormula phi = parse_cnf("p cnf 3 1\n1 2 -3 0\n");
  const ReductionInstance el0 = gen_ftmw_instance(phi, ElapsedVariant::Zero, false);
  EXPECT_EQ(el0.graph.vertex_count(), 5);
  EXPECT_EQ(el0.graph.arc_count(), 9);
  EXPECT_EQ(el0.graph.lifetime(), 2);
  EXPECT_TRUE(validate(el0.graph).ok());
  for (const TemporalArc& a : el0.graph.arcs()) EXPECT_EQ(a.elapsed(), 0);

  const ReductionInstance el1 = gen_ftmw_instance(phi, ElapsedVariant::One, false);
  EXPECT_EQ(el1.graph.vertex_count(), 5);
  EXPECT_EQ(el1.graph.arc_count(), 9);
  EXPECT_EQ(el1.graph.lifetime(), 4);
  for (const TemporalArc& a : el1.graph.arcs()) EXPECT_EQ(a.elapsed(), 1);
}

TEST(GenFtmw, UnsatisfiableMeansNoSpanningBranching) {
  const CnfFormula phi = parse_cnf("p cnf 1 2\n1 0\n-1 0\n");
  const ReductionInstance inst = gen_ftmw_instance(phi, ElapsedVariant::Zero, false);
  const Branching ft =
      brute_max_dtob(inst.graph, inst.root, DistanceKind::FastestTime);
  EXPECT_FALSE(ft.spanning(inst.graph));
}

TEST(GenFtmw, SimpleVariantIsADigraphAndLiftsLifetime) {
  const CnfFormula phi = parse_cnf("p cnf 2 2\n1 2 0\n-1 -2 0\n");
  const ReductionInstance el0 = gen_ftmw_instance(phi, ElapsedVariant::Zero, true);
  EXPECT_TRUE(is_simple_digraph(el0.graph));
  EXPECT_EQ(el0.graph.lifetime(), 2);
  const ReductionInstance el1 = gen_ftmw_instance(phi, ElapsedVariant::One, true);
  EXPECT_TRUE(is_simple_digraph(el1.graph));
  EXPECT_EQ(el1.graph.lifetime(), 5);
  EXPECT_FALSE(is_simple_digraph(
      gen_ftmw_instance(phi, ElapsedVariant::Zero, false).graph));
}

TEST(GenStToss, CountsMatchTheConstruction) {
  const CnfFormula phi = parse_cnf("p cnf 3 1\n1 -2 -3 0\n");
  const ReductionInstance inst = gen_st_toss_instance(phi, false);
  EXPECT_EQ(inst.graph.vertex_count(), 11);  // 3l + m + 1
  EXPECT_EQ(inst.arc_budget, 13);            // 4l + m
  EXPECT_EQ(inst.graph.lifetime(), 3);
  EXPECT_TRUE(validate(inst.graph).ok());
}

TEST(GenLdToss, VertexCountIsInvariant) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CnfFormula phi = testing::random_formula(seed);
    for (ElapsedVariant variant : {ElapsedVariant::Zero, ElapsedVariant::One}) {
      const ReductionInstance inst = gen_ld_toss_instance(phi, variant, false);
      EXPECT_EQ(inst.graph.vertex_count(),
                3 * phi.variable_count + phi.clause_count() + 1);
      EXPECT_EQ(inst.arc_budget, 4 * phi.variable_count + phi.clause_count());
    }
  }
}

TEST(GenMtToss, CountsAndDistances) {
  const CnfFormula phi = parse_cnf("p cnf 3 1\n1 -2 -3 0\n");
  const ReductionInstance inst = gen_mt_toss_instance(phi, ElapsedVariant::Zero, false);
  EXPECT_EQ(inst.graph.vertex_count(), 17);  // 5l + m + 1
  EXPECT_EQ(inst.arc_budget, 19);            // 6l + m
  EXPECT_TRUE(is_simple_digraph(inst.graph));
  const DistanceVector mt =
      single_source(inst.graph, inst.root, DistanceKind::MinimumTransfers);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(mt[inst.graph.require_vertex("y" + std::to_string(i))], 3);
  }
  EXPECT_EQ(mt[inst.graph.require_vertex("c1")], 3);
}

TEST(GenSimpleVariants, AllProduceDigraphs) {
  const CnfFormula phi = parse_cnf("p cnf 2 2\n1 -2 0\n-1 2 0\n");
  EXPECT_TRUE(is_simple_digraph(gen_st_toss_instance(phi, true).graph));
  EXPECT_TRUE(is_simple_digraph(
      gen_ld_toss_instance(phi, ElapsedVariant::Zero, true).graph));
  EXPECT_TRUE(is_simple_digraph(
      gen_ld_toss_instance(phi, ElapsedVariant::One, true).graph));
  EXPECT_TRUE(is_simple_digraph(
      gen_mt_toss_instance(phi, ElapsedVariant::One, true).graph));
}

struct RoundTripCase {
  const char* name;
  std::function<ReductionInstance(const CnfFormula&)> generate;
  DistanceKind kind;
  bool branching_decision;  // spanning TOB instead of a TOSS budget
};

class ReductionRoundTrip : public ::testing::TestWithParam<int> {};

TEST(ReductionRoundTrips, SatisfiabilityMatchesDecisions) {
  const std::vector<RoundTripCase> cases = {
      {"ftmw-el0",
       [](const CnfFormula& f) { return gen_ftmw_instance(f, ElapsedVariant::Zero, false); },
       DistanceKind::FastestTime, true},
      {"ftmw-el1-simple",
       [](const CnfFormula& f) { return gen_ftmw_instance(f, ElapsedVariant::One, true); },
       DistanceKind::MinimumWaiting, true},
      {"st-toss",
       [](const CnfFormula& f) { return gen_st_toss_instance(f, false); },
       DistanceKind::ShortestTravelling, false},
      {"st-toss-simple",
       [](const CnfFormula& f) { return gen_st_toss_instance(f, true); },
       DistanceKind::ShortestTravelling, false},
      {"ld-toss-el0",
       [](const CnfFormula& f) { return gen_ld_toss_instance(f, ElapsedVariant::Zero, false); },
       DistanceKind::LatestDeparture, false},
      {"ld-toss-el1-simple",
       [](const CnfFormula& f) { return gen_ld_toss_instance(f, ElapsedVariant::One, true); },
       DistanceKind::LatestDeparture, false},
      {"mt-toss-el1",
       [](const CnfFormula& f) { return gen_mt_toss_instance(f, ElapsedVariant::One, false); },
       DistanceKind::MinimumTransfers, false},
  };
  for (const RoundTripCase& test_case : cases) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const CnfFormula phi = testing::random_formula(seed * 7 + 1);
      const bool satisfiable = sat_brute(phi).has_value();
      const ReductionInstance inst = test_case.generate(phi);
      HardnessOptions options;
      options.max_tob_vertices = 16;
      options.max_toss_arcs = 63;
      bool decision = false;
      if (test_case.branching_decision) {
        decision = brute_max_dtob(inst.graph, inst.root, test_case.kind, options)
                       .spanning(inst.graph);
      } else {
        decision = brute_min_dtoss(inst.graph, inst.root, test_case.kind,
                                   *inst.arc_budget, options)
                       .has_value();
      }
      EXPECT_EQ(satisfiable, decision) << test_case.name << " seed " << seed;
    }
  }
}

}  // namespace
}  // namespace tgb
