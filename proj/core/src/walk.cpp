#include "tgb/walk.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tgb {

namespace {

void require_valid(const TemporalGraph& graph, const TemporalWalk& walk) {
  if (!graph.contains_vertex(walk.origin)) {
    throw InvalidWalkError("walk origin out of range");
  }
  VertexId at = walk.origin;
  Time last_arrival = 0;
  bool first = true;
  for (ArcId id : walk.arc_ids) {
    if (id < 0 || id >= graph.arc_count()) {
      throw InvalidWalkError("walk references arc id " + std::to_string(id) +
                             " out of range");
    }
    const TemporalArc& a = graph.arc(id);
    if (a.tail != at) {
      throw InvalidWalkError("walk arcs do not chain at arc id " + std::to_string(id));
    }
    if (!first && a.t_start < last_arrival) {
      throw InvalidWalkError("walk is not temporal at arc id " + std::to_string(id));
    }
    at = a.head;
    last_arrival = a.t_arrive;
    first = false;
  }
}

}  // namespace

bool is_temporal_walk(const TemporalGraph& graph, const TemporalWalk& walk) {
  try {
    require_valid(graph, walk);
  } catch (const InvalidWalkError&) {
    return false;
  }
  return true;
}

VertexId walk_endpoint(const TemporalGraph& graph, const TemporalWalk& walk) {
  if (walk.trivial()) return walk.origin;
  return graph.arc(walk.arc_ids.back()).head;
}

WalkMetrics walk_metrics(const TemporalGraph& graph, const TemporalWalk& walk) {
  require_valid(graph, walk);
  WalkMetrics m;
  if (walk.trivial()) return m;
  m.length = walk.length();
  m.t_start = graph.arc(walk.arc_ids.front()).t_start;
  m.t_arrive = graph.arc(walk.arc_ids.back()).t_arrive;
  m.duration = m.t_arrive - m.t_start;
  for (std::size_t i = 0; i < walk.arc_ids.size(); ++i) {
    const TemporalArc& a = graph.arc(walk.arc_ids[i]);
    m.travelling_time += a.elapsed();
    if (i + 1 < walk.arc_ids.size()) {
      m.wait += graph.arc(walk.arc_ids[i + 1]).t_start - a.t_arrive;
    }
  }
  return m;
}

Dist walk_measure(const TemporalGraph& graph, const TemporalWalk& walk,
                  DistanceKind kind) {
  const WalkMetrics m = walk_metrics(graph, walk);
  switch (kind) {
    case DistanceKind::EarliestArrival: return m.t_arrive;
    case DistanceKind::FastestTime: return m.duration;
    case DistanceKind::LatestDeparture: return m.t_start;
    case DistanceKind::MinimumTransfers: return static_cast<Dist>(m.length);
    case DistanceKind::MinimumWaiting: return m.wait;
    case DistanceKind::ShortestTravelling: return m.travelling_time;
  }
  throw std::logic_error("unhandled distance kind");
}

TemporalWalk walk_prefix(const TemporalWalk& walk, std::size_t length) {
  TemporalWalk out;
  out.origin = walk.origin;
  out.arc_ids.assign(walk.arc_ids.begin(),
                     walk.arc_ids.begin() + static_cast<std::ptrdiff_t>(length));
  return out;
}

TemporalWalk walk_suffix(const TemporalGraph& graph, const TemporalWalk& walk,
                         std::size_t skip) {
  TemporalWalk out;
  out.origin = skip == 0 ? walk.origin : graph.arc(walk.arc_ids[skip - 1]).head;
  out.arc_ids.assign(walk.arc_ids.begin() + static_cast<std::ptrdiff_t>(skip),
                     walk.arc_ids.end());
  return out;
}

TemporalWalk extract_temporal_path(const TemporalGraph& graph,
                                   const TemporalWalk& walk) {
  require_valid(graph, walk);
  TemporalWalk path = walk;
  bool changed = true;
  while (changed) {
    changed = false;
    // Vertex sequence v_0 .. v_k of the current walk.
    std::vector<VertexId> seq;
    seq.push_back(path.origin);
    for (ArcId id : path.arc_ids) seq.push_back(graph.arc(id).head);
    std::unordered_map<VertexId, std::size_t> first_seen;
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      auto [it, inserted] = first_seen.emplace(seq[pos], pos);
      if (!inserted) {
        // Cut the cycle between the two occurrences.
        const std::size_t lo = it->second;
        path.arc_ids.erase(path.arc_ids.begin() + static_cast<std::ptrdiff_t>(lo),
                           path.arc_ids.begin() + static_cast<std::ptrdiff_t>(pos));
        changed = true;
        break;
      }
    }
  }
  return path;
}

TemporalWalk concatenate(const TemporalGraph& graph, const TemporalWalk& first,
                         const TemporalWalk& second) {
  if (walk_endpoint(graph, first) != second.origin) {
    throw InvalidWalkError("concatenation endpoints do not match");
  }
  TemporalWalk out = first;
  out.arc_ids.insert(out.arc_ids.end(), second.arc_ids.begin(), second.arc_ids.end());
  return out;
}

}  // namespace tgb
