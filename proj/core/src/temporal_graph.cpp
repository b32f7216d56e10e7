#include "tgb/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgb {

std::string_view to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::EarliestArrival: return "EA";
    case DistanceKind::FastestTime: return "FT";
    case DistanceKind::LatestDeparture: return "LD";
    case DistanceKind::MinimumTransfers: return "MT";
    case DistanceKind::MinimumWaiting: return "MW";
    case DistanceKind::ShortestTravelling: return "ST";
  }
  return "?";
}

std::optional<DistanceKind> parse_distance_kind(std::string_view text) {
  for (DistanceKind kind : kAllDistanceKinds) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

TemporalGraph::TemporalGraph(std::vector<std::string> vertex_labels,
                             std::vector<TemporalArc> arcs,
                             std::optional<Time> declared_lifetime)
    : labels_(std::move(vertex_labels)), arcs_(std::move(arcs)) {
  const VertexId n = vertex_count();
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const TemporalArc& a = arcs_[i];
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw std::invalid_argument("arc " + std::to_string(i) +
                                  " references an unknown vertex id");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    auto [it, inserted] = label_index_.emplace(labels_[static_cast<std::size_t>(v)], v);
    if (!inserted) {
      throw std::invalid_argument("duplicate vertex label '" +
                                  labels_[static_cast<std::size_t>(v)] + "'");
    }
  }

  if (declared_lifetime.has_value()) {
    lifetime_ = *declared_lifetime;
  } else {
    lifetime_ = 1;
    for (const TemporalArc& a : arcs_) lifetime_ = std::max(lifetime_, a.t_arrive);
  }

  out_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  in_off_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const TemporalArc& a : arcs_) {
    ++out_off_[static_cast<std::size_t>(a.tail) + 1];
    ++in_off_[static_cast<std::size_t>(a.head) + 1];
  }
  for (VertexId v = 0; v < n; ++v) {
    out_off_[static_cast<std::size_t>(v) + 1] += out_off_[static_cast<std::size_t>(v)];
    in_off_[static_cast<std::size_t>(v) + 1] += in_off_[static_cast<std::size_t>(v)];
  }
  out_ids_.resize(arcs_.size());
  in_ids_.resize(arcs_.size());
  std::vector<std::size_t> out_cursor(out_off_.begin(), out_off_.end() - 1);
  std::vector<std::size_t> in_cursor(in_off_.begin(), in_off_.end() - 1);
  for (ArcId id = 0; id < arc_count(); ++id) {
    const TemporalArc& a = arc(id);
    out_ids_[out_cursor[static_cast<std::size_t>(a.tail)]++] = id;
    in_ids_[in_cursor[static_cast<std::size_t>(a.head)]++] = id;
  }
}

std::optional<VertexId> TemporalGraph::find_vertex(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

VertexId TemporalGraph::require_vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v.has_value()) {
    throw std::invalid_argument("unknown vertex '" + std::string(label) + "'");
  }
  return *v;
}

void TemporalGraph::require_vertex_id(VertexId v) const {
  if (!contains_vertex(v)) {
    throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
  }
}

std::span<const ArcId> TemporalGraph::out_arcs(VertexId v) const {
  require_vertex_id(v);
  const std::size_t lo = out_off_[static_cast<std::size_t>(v)];
  const std::size_t hi = out_off_[static_cast<std::size_t>(v) + 1];
  return {out_ids_.data() + lo, hi - lo};
}

std::span<const ArcId> TemporalGraph::in_arcs(VertexId v) const {
  require_vertex_id(v);
  const std::size_t lo = in_off_[static_cast<std::size_t>(v)];
  const std::size_t hi = in_off_[static_cast<std::size_t>(v) + 1];
  return {in_ids_.data() + lo, hi - lo};
}

ValidationReport validate(const TemporalGraph& graph) {
  if (graph.lifetime() < 1) {
    return ValidationReport::failure(kNoArc, "lifetime must be at least 1");
  }
  for (ArcId id = 0; id < graph.arc_count(); ++id) {
    const TemporalArc& a = graph.arc(id);
    if (a.tail == a.head) {
      return ValidationReport::failure(id, "self-loop");
    }
    if (a.t_start > a.t_arrive) {
      return ValidationReport::failure(id, "t_start exceeds t_arrive");
    }
    if (a.t_start < 1) {
      return ValidationReport::failure(id, "t_start below 1");
    }
    if (a.t_arrive > graph.lifetime()) {
      return ValidationReport::failure(id, "t_arrive exceeds lifetime");
    }
  }
  return ValidationReport::success();
}

TemporalGraph reverse(const TemporalGraph& graph) {
  const Time tau = graph.lifetime();
  std::vector<TemporalArc> reversed;
  reversed.reserve(static_cast<std::size_t>(graph.arc_count()));
  for (const TemporalArc& a : graph.arcs()) {
    reversed.push_back({a.head, a.tail, tau - a.t_arrive + 1, tau - a.t_start + 1});
  }
  return TemporalGraph(std::vector<std::string>(graph.labels().begin(), graph.labels().end()),
                       std::move(reversed), tau);
}

std::vector<ArcId> induced_arc_ids(const TemporalGraph& graph,
                                   std::span<const VertexId> vertices) {
  std::vector<bool> keep(static_cast<std::size_t>(graph.vertex_count()), false);
  for (VertexId v : vertices) {
    graph.require_vertex_id(v);
    keep[static_cast<std::size_t>(v)] = true;
  }
  std::vector<ArcId> ids;
  for (ArcId id = 0; id < graph.arc_count(); ++id) {
    const TemporalArc& a = graph.arc(id);
    if (keep[static_cast<std::size_t>(a.tail)] && keep[static_cast<std::size_t>(a.head)]) {
      ids.push_back(id);
    }
  }
  return ids;
}

TemporalGraph induced_subgraph(const TemporalGraph& graph,
                               std::span<const VertexId> vertices) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<VertexId> dense(static_cast<std::size_t>(graph.vertex_count()), kNoVertex);
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    graph.require_vertex_id(sorted[i]);
    dense[static_cast<std::size_t>(sorted[i])] = static_cast<VertexId>(i);
    labels.push_back(graph.label(sorted[i]));
  }

  std::vector<TemporalArc> arcs;
  for (ArcId id : induced_arc_ids(graph, sorted)) {
    const TemporalArc& a = graph.arc(id);
    arcs.push_back({dense[static_cast<std::size_t>(a.tail)],
                    dense[static_cast<std::size_t>(a.head)], a.t_start, a.t_arrive});
  }
  return TemporalGraph(std::move(labels), std::move(arcs), graph.lifetime());
}

}  // namespace tgb
