#pragma once

#include <vector>

#include "tgb/temporal_graph.hpp"
#include "tgb/types.hpp"

namespace tgb {

// Single-source optimum per vertex; kUnreachable marks vertices with no
// temporal walk from the root. By convention value(root) is 0 for every kind
// except LD, where it is lifetime + 1.
struct DistanceVector {
  VertexId root = kNoVertex;
  DistanceKind kind = DistanceKind::EarliestArrival;
  std::vector<Dist> value;

  Dist operator[](VertexId v) const { return value[static_cast<std::size_t>(v)]; }
};

// Earliest arrival among the walks that realize the kind's optimum
// (arrival(root) = 0, kUnreachable where unreachable).
struct EadVector {
  VertexId root = kNoVertex;
  DistanceKind kind = DistanceKind::EarliestArrival;
  std::vector<Dist> arrival;

  Dist operator[](VertexId v) const { return arrival[static_cast<std::size_t>(v)]; }
};

DistanceVector single_source(const TemporalGraph& graph, VertexId root,
                             DistanceKind kind);

EadVector single_source_ead(const TemporalGraph& graph, VertexId root,
                            DistanceKind kind);

// Both vectors from one traversal.
struct DistanceWithEad {
  DistanceVector dist;
  EadVector ead;
};
DistanceWithEad single_source_with_ead(const TemporalGraph& graph, VertexId root,
                                       DistanceKind kind);

// One-scan earliest-arrival tree: arrival per vertex plus, for every vertex
// reached, the arc that first achieved its final arrival in scan order.
struct EaTree {
  std::vector<Dist> arrival;   // kUnreachable where not reachable; 0 at root
  std::vector<ArcId> parent;   // kNoArc at root / unreachable
};
EaTree earliest_arrival_tree(const TemporalGraph& graph, VertexId root);

}  // namespace tgb
