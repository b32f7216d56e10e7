#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgb/distances.hpp"
#include "tgb/oracle.hpp"
#include "tgb/temporal_graph.hpp"

namespace tgb {

// Root plus one parent arc per non-root member; the certificate for
// out-branching (and, with arcs read as leaving their vertex, in-branching)
// claims. Builders also record the realized distance and walk arrival per
// member so a report needs no recomputation.
struct BranchingEntry {
  VertexId vertex = kNoVertex;
  ArcId arc = kNoArc;
  Dist dist = 0;
  Dist arrival = 0;
};

struct Branching {
  VertexId root = kNoVertex;
  DistanceKind kind = DistanceKind::EarliestArrival;
  std::vector<BranchingEntry> parents;  // ascending vertex id

  std::size_t member_count() const { return parents.size() + 1; }
  bool spanning(const TemporalGraph& g) const {
    return member_count() == static_cast<std::size_t>(g.vertex_count());
  }
  std::vector<VertexId> members() const;
  bool is_member(VertexId v) const;
  const BranchingEntry* entry(VertexId v) const;  // nullptr for root / non-members
};

// Violated condition of the branching characterisation, named.
struct BranchingViolation {
  std::string condition;
  VertexId vertex = kNoVertex;
  ArcId arc = kNoArc;
};

struct TobReport {
  std::optional<BranchingViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

// Checks the out-branching characterisation: parent arcs enter their vertex,
// tails are members, the root has no parent, in-degrees are exactly one, and
// the unique root-to-member arc chain is a temporal walk.
TobReport verify_tob(const TemporalGraph& graph, const Branching& b);

struct DTobReport {
  std::optional<BranchingViolation> violation;
  bool spanning = false;
  bool ead = false;  // every member's walk also arrives at the EAD optimum
  bool ok() const { return !violation.has_value(); }
};

// verify_tob plus: every member's unique walk realizes kind(root, v) in the
// host graph. Also reports whether the branching spans and whether it is an
// EAD branching.
DTobReport verify_d_tob(const TemporalGraph& graph, const Branching& b,
                        DistanceKind kind);

// In-branching variants: parent arcs leave their vertex toward the root.
// Implemented on the reverse graph (arc ids are preserved by reversal).
TobReport verify_tib(const TemporalGraph& graph, const Branching& b);
DTobReport verify_d_tib(const TemporalGraph& graph, const Branching& b,
                        DistanceKind kind);

// Maximal TOB over the temporally reachable set, built as an EA tree in one
// arc-sorted scan: every member's walk realizes its earliest arrival.
Branching spanning_tob(const TemporalGraph& graph, VertexId root);

// Maximum MT-TOB; also an EAMT-TOB. Parent choice takes the smallest-arrival
// qualifying in-arc, arc id breaking ties.
Branching max_mt_tob(const TemporalGraph& graph, VertexId root);

// Maximum LD- or ST-TOB; also an EAD-TOB. Level queue ordered by arrival
// time with arc-id tie-break; kind outside {LD, ST} throws.
Branching max_ld_st_tob(const TemporalGraph& graph, VertexId root,
                        DistanceKind kind);

// Independent desk-scale oracle for the member set of the two constructions
// above: vertices with an enumerated prefix-optimal path from the root.
// kind must be LD, MT or ST.
std::vector<VertexId> max_dtob_vertexset_oracle(
    const TemporalGraph& graph, VertexId root, DistanceKind kind,
    const EnumerationOptions& options = {});

// Maximum D-TIB via the reverse transform (EA and LD swap roles, the other
// kinds keep theirs). kind must be EA, LD, MT or ST; FT and MW require the
// exponential oracle in the hardness module.
Branching max_d_tib(const TemporalGraph& graph, VertexId root,
                    DistanceKind kind);

// Reinterprets a TOB of reverse(graph) as an in-branching of `graph` under
// `kind`: arc ids carry over, distances and arrivals are mapped through the
// time mirror.
Branching tib_from_reverse_tob(const TemporalGraph& graph, const Branching& rev_tob,
                               DistanceKind kind);

// Polynomial special cases for FT/MW maximum TOBs: lifetime 1, or lifetime
// 2-3 with all elapsed times at least 1. Returns nullopt when the instance
// falls in the hard regime.
std::optional<Branching> ft_mw_poly_cases(const TemporalGraph& graph,
                                          VertexId root, DistanceKind kind);

}  // namespace tgb
