#pragma once

#include <cstddef>
#include <vector>

#include "tgb/temporal_graph.hpp"
#include "tgb/types.hpp"

namespace tgb {

// A walk is an origin vertex plus a (possibly empty) chain of arc ids.
struct TemporalWalk {
  VertexId origin = kNoVertex;
  std::vector<ArcId> arc_ids;

  std::size_t length() const { return arc_ids.size(); }
  bool trivial() const { return arc_ids.empty(); }

  friend bool operator==(const TemporalWalk&, const TemporalWalk&) = default;
};

// All six walk measures; every field is 0 for the trivial walk (time 0 is
// reserved as "no time" since legal time steps start at 1).
struct WalkMetrics {
  Time t_start = 0;
  Time t_arrive = 0;
  Dist duration = 0;
  Dist wait = 0;
  Dist travelling_time = 0;
  std::size_t length = 0;

  friend bool operator==(const WalkMetrics&, const WalkMetrics&) = default;
};

// True iff arc ids exist, consecutive arcs chain on vertices starting at
// `origin`, and each arrival is no later than the next start.
bool is_temporal_walk(const TemporalGraph& graph, const TemporalWalk& walk);

// Final vertex of the walk (origin when trivial). Assumes a chaining walk.
VertexId walk_endpoint(const TemporalGraph& graph, const TemporalWalk& walk);

// Throws InvalidWalkError when the arc sequence is non-chaining or
// non-temporal.
WalkMetrics walk_metrics(const TemporalGraph& graph, const TemporalWalk& walk);

// Metric value of a walk under one optimisation criterion (duration for FT,
// start for LD, ...). Same validity requirements as walk_metrics.
Dist walk_measure(const TemporalGraph& graph, const TemporalWalk& walk,
                  DistanceKind kind);

// First `length` arcs of the walk; length 0 yields the trivial walk at the
// origin.
TemporalWalk walk_prefix(const TemporalWalk& walk, std::size_t length);

// Walk starting after the first `skip` arcs; its origin is the endpoint of
// the corresponding prefix.
TemporalWalk walk_suffix(const TemporalGraph& graph, const TemporalWalk& walk,
                         std::size_t skip);

// Splices out cycles until all vertices are distinct; endpoints are
// preserved and the result is temporal whenever the input is.
TemporalWalk extract_temporal_path(const TemporalGraph& graph,
                                   const TemporalWalk& walk);

// Concatenation; `second.origin` must equal the endpoint of `first`.
TemporalWalk concatenate(const TemporalGraph& graph, const TemporalWalk& first,
                         const TemporalWalk& second);

}  // namespace tgb
