#include "tgb/static_expansion.hpp"

#include <algorithm>
#include <queue>

namespace tgb {

StaticExpansion static_expansion(const TemporalGraph& graph) {
  StaticExpansion se;
  se.vertex_count = graph.vertex_count();
  se.tau = graph.lifetime();
  se.movement.reserve(static_cast<std::size_t>(graph.arc_count()));
  for (ArcId id = 0; id < graph.arc_count(); ++id) {
    const TemporalArc& a = graph.arc(id);
    se.movement.push_back({se.node(a.tail, a.t_start), se.node(a.head, a.t_arrive), id});
  }
  return se;
}

Dist ExpansionPaths::vertex_distance(const StaticExpansion& se, VertexId v) const {
  Dist best = kUnreachable;
  for (Time t = 1; t <= se.tau; ++t) {
    best = std::min(best, dist[static_cast<std::size_t>(se.node(v, t))]);
  }
  return best;
}

ExpansionPaths expansion_dijkstra(
    const StaticExpansion& se, VertexId root,
    const std::function<Dist(const TemporalArc&)>& movement_weight,
    const TemporalGraph& graph) {
  const int nodes = se.node_count();
  ExpansionPaths out;
  out.dist.assign(static_cast<std::size_t>(nodes), kUnreachable);
  out.parent_arc.assign(static_cast<std::size_t>(nodes), kNoArc);
  out.parent_node.assign(static_cast<std::size_t>(nodes), -1);

  // Adjacency: movement arcs bucketed by source node; waiting arcs implicit.
  std::vector<std::vector<std::size_t>> out_movement(static_cast<std::size_t>(nodes));
  for (std::size_t i = 0; i < se.movement.size(); ++i) {
    out_movement[static_cast<std::size_t>(se.movement[i].from)].push_back(i);
  }

  using Entry = std::pair<Dist, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  const int source = se.node(root, 1);
  out.dist[static_cast<std::size_t>(source)] = 0;
  queue.push({0, source});

  std::vector<bool> done(static_cast<std::size_t>(nodes), false);
  while (!queue.empty()) {
    auto [d, node] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(node)]) continue;
    done[static_cast<std::size_t>(node)] = true;

    auto relax = [&](int to, Dist weight, ArcId via_arc) {
      const Dist candidate = d + weight;
      if (candidate < out.dist[static_cast<std::size_t>(to)]) {
        out.dist[static_cast<std::size_t>(to)] = candidate;
        out.parent_arc[static_cast<std::size_t>(to)] = via_arc;
        out.parent_node[static_cast<std::size_t>(to)] = node;
        queue.push({candidate, to});
      }
    };

    for (std::size_t i : out_movement[static_cast<std::size_t>(node)]) {
      const StaticExpansion::MovementArc& mv = se.movement[i];
      relax(mv.to, movement_weight(graph.arc(mv.source_arc)), mv.source_arc);
    }
    if (se.node_time(node) < se.tau) {
      relax(node + 1, 0, kNoArc);
    }
  }
  return out;
}

std::vector<ArcId> collapse_tree_arcs(const ExpansionPaths& paths) {
  std::vector<ArcId> arcs;
  for (std::size_t node = 0; node < paths.parent_arc.size(); ++node) {
    if (paths.parent_arc[node] != kNoArc && paths.dist[node] != kUnreachable) {
      arcs.push_back(paths.parent_arc[node]);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace tgb
