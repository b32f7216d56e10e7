#pragma once

#include <functional>
#include <vector>

#include "tgb/temporal_graph.hpp"

namespace tgb {

/*
  Layered static digraph of a temporal graph: one node per (vertex, time
  step), a movement arc per temporal arc, and waiting arcs between
  consecutive copies of the same vertex. Used as an alternative distance
  oracle in tests; collapsing its shortest-path trees back to the temporal
  graph is deliberately NOT offered as a branching construction (it does not
  produce one in general).
*/
struct StaticExpansion {
  struct MovementArc {
    int from = 0;
    int to = 0;
    ArcId source_arc = kNoArc;
  };

  VertexId vertex_count = 0;
  Time tau = 1;
  std::vector<MovementArc> movement;  // ascending source arc id

  int node_count() const { return static_cast<int>(vertex_count) * static_cast<int>(tau); }
  int node(VertexId v, Time t) const {
    return static_cast<int>(v) * static_cast<int>(tau) + static_cast<int>(t - 1);
  }
  VertexId node_vertex(int node) const {
    return static_cast<VertexId>(node / static_cast<int>(tau));
  }
  Time node_time(int node) const { return node % static_cast<int>(tau) + 1; }
  std::size_t waiting_arc_count() const {
    return static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(tau - 1);
  }
};

StaticExpansion static_expansion(const TemporalGraph& graph);

// Shortest-path tree over the expansion with per-movement-arc weights and
// zero-weight waiting arcs. Deterministic: ties pop in node-index order and
// relaxations keep the first parent achieving the final distance.
struct ExpansionPaths {
  std::vector<Dist> dist;         // per expansion node; kUnreachable if not reached
  std::vector<ArcId> parent_arc;  // movement source arc, or kNoArc for waiting/none
  std::vector<int> parent_node;   // -1 for the source / unreached

  // min over the time copies of v
  Dist vertex_distance(const StaticExpansion& se, VertexId v) const;
};

ExpansionPaths expansion_dijkstra(
    const StaticExpansion& se, VertexId root,
    const std::function<Dist(const TemporalArc&)>& movement_weight,
    const TemporalGraph& graph);

// Movement arcs of the Dijkstra tree mapped back to temporal arc ids (the
// collapse a branching construction must not rely on).
std::vector<ArcId> collapse_tree_arcs(const ExpansionPaths& paths);

}  // namespace tgb
