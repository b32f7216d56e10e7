#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tgb/types.hpp"

namespace tgb {

// One temporal arc: traversal leaves `tail` at t_start and lands on `head`
// at t_arrive, with t_start <= t_arrive and both inside [1, tau].
struct TemporalArc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  Time t_start = 0;
  Time t_arrive = 0;

  Time elapsed() const { return t_arrive - t_start; }

  friend bool operator==(const TemporalArc&, const TemporalArc&) = default;
};

/*
  Immutable arc-indexed temporal multidigraph.

  Vertices are dense 0-based ids carrying an external string label; arcs keep
  their construction order and that order is the canonical tie-breaking order
  for every algorithm in this library. Parallel arcs (identical tuples
  included) are permitted. The lifetime may be declared explicitly; otherwise
  it is the maximum arrival time over arcs (at least 1).

  Instances are immutable after construction and safe to share across
  concurrent readers.
*/
class TemporalGraph {
 public:
  TemporalGraph(std::vector<std::string> vertex_labels,
                std::vector<TemporalArc> arcs,
                std::optional<Time> declared_lifetime = std::nullopt);

  VertexId vertex_count() const { return static_cast<VertexId>(labels_.size()); }
  ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }
  Time lifetime() const { return lifetime_; }

  const TemporalArc& arc(ArcId id) const { return arcs_[static_cast<std::size_t>(id)]; }
  std::span<const TemporalArc> arcs() const { return arcs_; }

  const std::string& label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const std::string> labels() const { return labels_; }

  // Lookup by external name; nullopt when unknown.
  std::optional<VertexId> find_vertex(std::string_view label) const;
  // Same, but throws std::invalid_argument naming the label.
  VertexId require_vertex(std::string_view label) const;

  bool contains_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  void require_vertex_id(VertexId v) const;

  // Arc ids leaving / entering v, in ascending arc-id order.
  std::span<const ArcId> out_arcs(VertexId v) const;
  std::span<const ArcId> in_arcs(VertexId v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<TemporalArc> arcs_;
  Time lifetime_ = 1;
  std::unordered_map<std::string, VertexId> label_index_;
  // CSR adjacency, arc ids sorted ascending per bucket.
  std::vector<ArcId> out_ids_, in_ids_;
  std::vector<std::size_t> out_off_, in_off_;
};

// Value-typed outcome of invariant checking; `ok()` or the first offence.
struct ValidationReport {
  bool valid = true;
  ArcId offending_arc = kNoArc;
  std::string message;

  bool ok() const { return valid; }
  static ValidationReport success() { return {}; }
  static ValidationReport failure(ArcId arc, std::string message) {
    return {false, arc, std::move(message)};
  }
};

// Checks per-arc invariants (no self-loops, t_start <= t_arrive, times inside
// [1, lifetime]) and names the first offending arc id.
ValidationReport validate(const TemporalGraph& graph);

// Arc-wise time reversal: (u,v,s,t) becomes (v,u,tau-t+1,tau-s+1). Vertices,
// lifetime and arc order are preserved, so arc id i of the output is the
// reverse of arc id i of the input.
TemporalGraph reverse(const TemporalGraph& graph);

// Keeps exactly the arcs with both endpoints in `vertices`; arc order and
// lifetime are unchanged. Vertex ids are re-densified; labels survive.
// The i-th kept arc of the output corresponds to the i-th qualifying arc of
// the input (see induced_arc_ids for the id mapping).
TemporalGraph induced_subgraph(const TemporalGraph& graph,
                               std::span<const VertexId> vertices);

// Arc ids of `graph` that survive induced_subgraph with the same vertex set,
// in ascending order.
std::vector<ArcId> induced_arc_ids(const TemporalGraph& graph,
                                   std::span<const VertexId> vertices);

}  // namespace tgb
