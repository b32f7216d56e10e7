#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tgb/branching.hpp"
#include "tgb/cnf.hpp"
#include "tgb/oracle.hpp"
#include "tgb/temporal_graph.hpp"
#include "tgb/walk.hpp"

namespace tgb {

// Size guards for the exponential searches. Tunable per call; exceeding
// a guard raises SizeGuardError rather than silently truncating.
struct HardnessOptions {
  int max_tob_vertices = 10;
  int max_toss_arcs = 16;
  int max_sat_variables = 20;
  EnumerationOptions enumeration;
};

// Arc subset plus one realizing walk per vertex (indexed by vertex id); the
// stored walks use only arcs of the subset and realize the host-graph
// distance of their endpoint.
struct TossWitness {
  std::vector<ArcId> arcs;
  std::vector<TemporalWalk> realizing;
};

// Exact maximum kind-TOB by exhaustive search: vertex subsets largest first
// (lexicographic within a size), parent-arc assignments in a canonical
// insertion order. Distances come from the enumeration oracle, keeping this
// routine independent of the polynomial algorithms it cross-checks.
Branching brute_max_dtob(const TemporalGraph& graph, VertexId root,
                         DistanceKind kind, const HardnessOptions& options = {});

// Exact minimum-size decision for the kind-TOSS: is there an arc subset of
// size at most k whose subgraph contains a realizing walk for every vertex?
// Search order: mandatory arcs first (arcs lying on every realizing walk of
// some vertex), then free subsets by increasing cardinality, lexicographic
// on arc-id sets. Vertices unreachable in the host graph make the answer no.
std::optional<TossWitness> brute_min_dtoss(const TemporalGraph& graph,
                                           VertexId root, DistanceKind kind,
                                           std::int64_t k,
                                           const HardnessOptions& options = {});

// Spanning EA-TOB and minimum EA-TOSS coincide: yes with an (n-1)-arc
// witness when every vertex is temporally reachable, no otherwise.
std::optional<TossWitness> ea_toss(const TemporalGraph& graph, VertexId root);

// In-spanning variant through the reverse transform (EA and LD swap, the
// rest keep their kind); witness walks are returned in host orientation.
std::optional<TossWitness> brute_min_dtiss(const TemporalGraph& graph,
                                           VertexId root, DistanceKind kind,
                                           std::int64_t k,
                                           const HardnessOptions& options = {});

// Polynomial route for the one tractable TISS kind: a minimum LD-TISS is a
// minimum EA-TOSS of the reverse graph (size n-1 when it exists).
std::optional<TossWitness> min_ld_tiss(const TemporalGraph& graph, VertexId root);

// ---------------------------------------------------------------------------
// 3-SAT reduction generators. Instance factories for the NP-complete
// problems and round-trip correctness tests: the formula is satisfiable iff
// the generated decision problem answers yes.
// ---------------------------------------------------------------------------

// Elapsed-time profile of the generated arcs: every arc instantaneous (el 0)
// or every arc taking one time step (el 1).
enum class ElapsedVariant { Zero, One };

struct ReductionInstance {
  TemporalGraph graph;
  VertexId root;
  // Arc budget k of the TOSS decision; absent for the FT/MW branching
  // reduction, whose decision is "does a spanning TOB exist".
  std::optional<std::int64_t> arc_budget;
};

// phi satisfiable <=> the instance has a spanning FT-TOB <=> it has a
// spanning MW-TOB. `simple` applies the splitter-vertex modification that
// makes the underlying structure a digraph (at most one arc per ordered
// vertex pair); with ElapsedVariant::One it raises the lifetime to 5.
ReductionInstance gen_ftmw_instance(const CnfFormula& phi, ElapsedVariant variant,
                                    bool simple);

// phi satisfiable <=> an ST-TOSS with at most `arc_budget` arcs exists.
ReductionInstance gen_st_toss_instance(const CnfFormula& phi, bool simple);

// phi satisfiable <=> an LD-TOSS with at most `arc_budget` arcs exists.
ReductionInstance gen_ld_toss_instance(const CnfFormula& phi, ElapsedVariant variant,
                                       bool simple);

// phi satisfiable <=> an MT-TOSS with at most `arc_budget` arcs exists.
// The construction is already simple; the flag changes nothing.
ReductionInstance gen_mt_toss_instance(const CnfFormula& phi, ElapsedVariant variant,
                                       bool simple);

}  // namespace tgb
