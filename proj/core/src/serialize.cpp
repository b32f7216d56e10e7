#include "tgb/serialize.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tgb {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json arc_to_json(const TemporalGraph& g, ArcId id) {
  const TemporalArc& a = g.arc(id);
  ordered_json j;
  j["tail"] = g.label(a.tail);
  j["head"] = g.label(a.head);
  j["t_start"] = a.t_start;
  j["t_arrive"] = a.t_arrive;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string branching_to_json(const TemporalGraph& graph, const Branching& b) {
  ordered_json j;
  j["root"] = graph.label(b.root);
  j["kind"] = std::string(to_string(b.kind));
  ordered_json members = ordered_json::array();
  for (VertexId v : b.members()) members.push_back(graph.label(v));
  j["members"] = members;
  ordered_json parents = ordered_json::array();
  for (const BranchingEntry& e : b.parents) {
    ordered_json p;
    p["vertex"] = graph.label(e.vertex);
    p["arc"] = arc_to_json(graph, e.arc);
    p["dist"] = e.dist;
    p["arrival"] = e.arrival;
    parents.push_back(p);
  }
  j["parents"] = parents;
  return dump(j);
}

Branching branching_from_json(const TemporalGraph& graph, const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Branching b;
  b.root = graph.require_vertex(j.at("root").get<std::string>());
  const auto kind = parse_distance_kind(j.at("kind").get<std::string>());
  if (!kind.has_value()) {
    throw std::runtime_error("unknown distance kind '" +
                             j.at("kind").get<std::string>() + "'");
  }
  b.kind = *kind;

  // Smallest arc id per arc tuple.
  std::map<std::tuple<VertexId, VertexId, Time, Time>, ArcId> arc_index;
  for (ArcId id = graph.arc_count(); id-- > 0;) {
    const TemporalArc& a = graph.arc(id);
    arc_index[{a.tail, a.head, a.t_start, a.t_arrive}] = id;
  }

  for (const auto& p : j.at("parents")) {
    BranchingEntry e;
    e.vertex = graph.require_vertex(p.at("vertex").get<std::string>());
    const auto& arc = p.at("arc");
    const VertexId tail = graph.require_vertex(arc.at("tail").get<std::string>());
    const VertexId head = graph.require_vertex(arc.at("head").get<std::string>());
    const Time s = arc.at("t_start").get<Time>();
    const Time t = arc.at("t_arrive").get<Time>();
    auto it = arc_index.find({tail, head, s, t});
    if (it == arc_index.end()) {
      throw std::runtime_error("branching arc not present in the graph");
    }
    e.arc = it->second;
    e.dist = p.value("dist", Dist{0});
    e.arrival = p.value("arrival", Dist{0});
    b.parents.push_back(e);
  }
  std::sort(b.parents.begin(), b.parents.end(),
            [](const BranchingEntry& x, const BranchingEntry& y) {
              return x.vertex < y.vertex;
            });
  return b;
}

std::string distances_to_json(const TemporalGraph& graph, const DistanceVector& dist,
                              const EadVector* ead) {
  ordered_json j;
  j["root"] = graph.label(dist.root);
  j["kind"] = std::string(to_string(dist.kind));
  ordered_json values = ordered_json::array();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    ordered_json row;
    row["vertex"] = graph.label(v);
    if (dist[v] == kUnreachable) {
      row["value"] = nullptr;
    } else {
      row["value"] = dist[v];
    }
    if (ead != nullptr) {
      if ((*ead)[v] == kUnreachable) {
        row["ead"] = nullptr;
      } else {
        row["ead"] = (*ead)[v];
      }
    }
    values.push_back(row);
  }
  j["values"] = values;
  return dump(j);
}

std::string toss_witness_to_json(const TemporalGraph& graph,
                                 const TossWitness& witness) {
  ordered_json j;
  j["arc_count"] = witness.arcs.size();
  ordered_json arcs = ordered_json::array();
  for (ArcId id : witness.arcs) arcs.push_back(arc_to_json(graph, id));
  j["arcs"] = arcs;
  ordered_json walks = ordered_json::array();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const TemporalWalk& w = witness.realizing[static_cast<std::size_t>(v)];
    ordered_json row;
    row["vertex"] = graph.label(v);
    ordered_json seq = ordered_json::array();
    for (ArcId id : w.arc_ids) seq.push_back(arc_to_json(graph, id));
    row["walk"] = seq;
    walks.push_back(row);
  }
  j["realizing"] = walks;
  return dump(j);
}

namespace {

void dot_arc(std::ostream& out, const TemporalGraph& g, ArcId id, bool solid) {
  const TemporalArc& a = g.arc(id);
  out << "  \"" << g.label(a.tail) << "\" -> \"" << g.label(a.head) << "\" [label=\"("
      << a.t_start << "," << a.t_arrive << ")\"";
  if (!solid) out << ", style=dotted";
  out << "];\n";
}

}  // namespace

void graph_to_dot(std::ostream& out, const TemporalGraph& graph) {
  out << "digraph temporal {\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << "  \"" << graph.label(v) << "\";\n";
  }
  for (ArcId id = 0; id < graph.arc_count(); ++id) dot_arc(out, graph, id, true);
  out << "}\n";
}

void branching_to_dot(std::ostream& out, const TemporalGraph& graph,
                      const Branching& b) {
  std::vector<bool> in_branching(static_cast<std::size_t>(graph.arc_count()), false);
  for (const BranchingEntry& e : b.parents) {
    in_branching[static_cast<std::size_t>(e.arc)] = true;
  }
  out << "digraph branching {\n";
  out << "  \"" << graph.label(b.root) << "\" [shape=doublecircle];\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v != b.root) out << "  \"" << graph.label(v) << "\";\n";
  }
  for (ArcId id = 0; id < graph.arc_count(); ++id) {
    dot_arc(out, graph, id, in_branching[static_cast<std::size_t>(id)]);
  }
  out << "}\n";
}

}  // namespace tgb
