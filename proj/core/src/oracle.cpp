#include "tgb/oracle.hpp"

#include <algorithm>

namespace tgb {
namespace {

enum class Mode { Paths, WaitWalks };

// Depth-first enumeration in arc-id order; `sink` of kNoVertex collects
// walks to every vertex.
//
// Mode::Paths visits pairwise-distinct vertices. Mode::WaitWalks enumerates
// the walk class needed by the waiting-time criterion: walks containing no
// zero-travelling closed subwalk. Splicing such a subwalk out of any walk
// changes neither its wait nor its travelling time nor its endpoints, so
// every optimum is attained inside the class; the class also repeats no arc
// (a repeated arc closes a zero-travelling subwalk) and never revisits a
// (vertex, accumulated travelling time) state, which keeps the search
// finite and free of same-instant permutation blowups.
class Enumerator {
 public:
  Enumerator(const TemporalGraph& g, VertexId source, VertexId sink, Mode mode,
             const EnumerationOptions& options)
      : g_(g), sink_(sink), mode_(mode), options_(options) {
    walk_.origin = source;
    visited_vertex_.assign(static_cast<std::size_t>(g.vertex_count()), false);
  }

  std::vector<TemporalWalk> run() {
    visited_vertex_[static_cast<std::size_t>(walk_.origin)] = true;
    seen_states_.push_back({walk_.origin, 0});
    extend(walk_.origin, 0, 0, true);
    return std::move(found_);
  }

 private:
  struct State {
    VertexId vertex;
    Dist travelled;
    friend bool operator==(const State&, const State&) = default;
  };

  void record() {
    if (found_.size() >= options_.max_walks) {
      throw OracleOverflowError("walk enumeration exceeded " +
                                std::to_string(options_.max_walks) + " walks");
    }
    found_.push_back(walk_);
  }

  bool state_seen(const State& s) const {
    return std::find(seen_states_.begin(), seen_states_.end(), s) != seen_states_.end();
  }

  void extend(VertexId at, Time ready, Dist travelled, bool first) {
    if (sink_ == kNoVertex || at == sink_) record();
    // A walk that reached the sink may still continue and come back in
    // WaitWalks mode; a path cannot, so cut that branch.
    if (mode_ == Mode::Paths && sink_ != kNoVertex && at == sink_ && !first) return;
    for (ArcId id : g_.out_arcs(at)) {
      const TemporalArc& a = g_.arc(id);
      if (!first && a.t_start < ready) continue;
      const Dist next_travelled = travelled + a.elapsed();
      if (mode_ == Mode::Paths) {
        if (visited_vertex_[static_cast<std::size_t>(a.head)]) continue;
        visited_vertex_[static_cast<std::size_t>(a.head)] = true;
      } else {
        if (state_seen({a.head, next_travelled})) continue;
        seen_states_.push_back({a.head, next_travelled});
      }
      walk_.arc_ids.push_back(id);
      extend(a.head, a.t_arrive, next_travelled, false);
      walk_.arc_ids.pop_back();
      if (mode_ == Mode::Paths) {
        visited_vertex_[static_cast<std::size_t>(a.head)] = false;
      } else {
        seen_states_.pop_back();
      }
    }
  }

  const TemporalGraph& g_;
  VertexId sink_;
  Mode mode_;
  EnumerationOptions options_;
  TemporalWalk walk_;
  std::vector<bool> visited_vertex_;
  std::vector<State> seen_states_;
  std::vector<TemporalWalk> found_;
};

}  // namespace

std::vector<TemporalWalk> enumerate_temporal_paths(
    const TemporalGraph& graph, VertexId u, VertexId v,
    const EnumerationOptions& options) {
  graph.require_vertex_id(u);
  graph.require_vertex_id(v);
  if (u == v) {
    return {TemporalWalk{u, {}}};
  }
  return Enumerator(graph, u, v, Mode::Paths, options).run();
}

std::vector<TemporalWalk> enumerate_wait_walks(
    const TemporalGraph& graph, VertexId u, VertexId v,
    const EnumerationOptions& options) {
  graph.require_vertex_id(u);
  graph.require_vertex_id(v);
  auto walks = Enumerator(graph, u, v, Mode::WaitWalks, options).run();
  if (u != v) {
    std::erase_if(walks, [](const TemporalWalk& w) { return w.trivial(); });
  }
  return walks;
}

namespace {

DistanceWithEad oracle_both(const TemporalGraph& graph, VertexId root,
                            DistanceKind kind, const EnumerationOptions& options) {
  graph.require_vertex_id(root);
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  DistanceWithEad out;
  out.dist = {root, kind, std::vector<Dist>(n, kUnreachable)};
  out.ead = {root, kind, std::vector<Dist>(n, kUnreachable)};

  const bool maximize = kind == DistanceKind::LatestDeparture;
  const auto walks =
      kind == DistanceKind::MinimumWaiting
          ? Enumerator(graph, root, kNoVertex, Mode::WaitWalks, options).run()
          : Enumerator(graph, root, kNoVertex, Mode::Paths, options).run();
  for (const TemporalWalk& w : walks) {
    const VertexId end = walk_endpoint(graph, w);
    if (end == root && !w.trivial()) continue;  // optima at the root are conventional
    const Dist measure = walk_measure(graph, w, kind);
    const Dist arrive = walk_metrics(graph, w).t_arrive;
    auto& best = out.dist.value[static_cast<std::size_t>(end)];
    auto& ead = out.ead.arrival[static_cast<std::size_t>(end)];
    const bool better =
        best == kUnreachable || (maximize ? measure > best : measure < best);
    if (better) {
      best = measure;
      ead = arrive;
    } else if (measure == best && arrive < ead) {
      ead = arrive;
    }
  }
  out.dist.value[static_cast<std::size_t>(root)] =
      kind == DistanceKind::LatestDeparture ? graph.lifetime() + 1 : 0;
  out.ead.arrival[static_cast<std::size_t>(root)] = 0;
  return out;
}

}  // namespace

DistanceVector oracle_single_source(const TemporalGraph& graph, VertexId root,
                                    DistanceKind kind,
                                    const EnumerationOptions& options) {
  return oracle_both(graph, root, kind, options).dist;
}

EadVector oracle_single_source_ead(const TemporalGraph& graph, VertexId root,
                                   DistanceKind kind,
                                   const EnumerationOptions& options) {
  return oracle_both(graph, root, kind, options).ead;
}

namespace {

// Shared prefix sweep. The prefix measures are accumulated incrementally.
template <typename CheckFn>
bool sweep_prefixes(const TemporalGraph& graph, VertexId root,
                    const TemporalWalk& walk, const CheckFn& check) {
  if (walk.origin != root) {
    throw InvalidWalkError("walk does not start at the root");
  }
  walk_metrics(graph, walk);  // validates chaining and temporality

  WalkMetrics m;  // metrics of the current prefix
  if (!check(root, m, /*trivial=*/true)) return false;
  for (std::size_t i = 0; i < walk.arc_ids.size(); ++i) {
    const TemporalArc& a = graph.arc(walk.arc_ids[i]);
    if (i == 0) {
      m.t_start = a.t_start;
    } else {
      m.wait += a.t_start - m.t_arrive;
    }
    m.t_arrive = a.t_arrive;
    m.duration = m.t_arrive - m.t_start;
    m.travelling_time += a.elapsed();
    m.length = i + 1;
    if (!check(a.head, m, /*trivial=*/false)) return false;
  }
  return true;
}

Dist measure_of(const WalkMetrics& m, DistanceKind kind) {
  switch (kind) {
    case DistanceKind::EarliestArrival: return m.t_arrive;
    case DistanceKind::FastestTime: return m.duration;
    case DistanceKind::LatestDeparture: return m.t_start;
    case DistanceKind::MinimumTransfers: return static_cast<Dist>(m.length);
    case DistanceKind::MinimumWaiting: return m.wait;
    case DistanceKind::ShortestTravelling: return m.travelling_time;
  }
  return 0;
}

}  // namespace

bool is_prefix_optimal(const TemporalGraph& graph, const DistanceVector& dist,
                       const TemporalWalk& walk) {
  return sweep_prefixes(
      graph, dist.root, walk,
      [&](VertexId at, const WalkMetrics& m, bool trivial) {
        if (trivial) return true;  // realizes the root value by convention
        return measure_of(m, dist.kind) == dist[at];
      });
}

bool is_ead_prefix_optimal(const TemporalGraph& graph, const DistanceVector& dist,
                           const EadVector& ead, const TemporalWalk& walk) {
  return sweep_prefixes(
      graph, dist.root, walk,
      [&](VertexId at, const WalkMetrics& m, bool trivial) {
        if (trivial) return true;
        return measure_of(m, dist.kind) == dist[at] &&
               static_cast<Dist>(m.t_arrive) == ead[at];
      });
}

bool is_prefix_optimal(const TemporalGraph& graph, VertexId root,
                       const TemporalWalk& walk, DistanceKind kind) {
  return is_prefix_optimal(graph, single_source(graph, root, kind), walk);
}

bool is_ead_prefix_optimal(const TemporalGraph& graph, VertexId root,
                           const TemporalWalk& walk, DistanceKind kind) {
  const DistanceWithEad both = single_source_with_ead(graph, root, kind);
  return is_ead_prefix_optimal(graph, both.dist, both.ead, walk);
}

}  // namespace tgb
