#include "tgb/branching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tgb/walk.hpp"

namespace tgb {

std::vector<VertexId> Branching::members() const {
  std::vector<VertexId> out;
  out.reserve(member_count());
  out.push_back(root);
  for (const BranchingEntry& e : parents) out.push_back(e.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

bool Branching::is_member(VertexId v) const {
  return v == root || entry(v) != nullptr;
}

const BranchingEntry* Branching::entry(VertexId v) const {
  auto it = std::lower_bound(
      parents.begin(), parents.end(), v,
      [](const BranchingEntry& e, VertexId x) { return e.vertex < x; });
  if (it == parents.end() || it->vertex != v) return nullptr;
  return &*it;
}

namespace {

// Walk measures accumulated along the parent chains. `state` doubles as the
// cycle detector.
struct ChainMetrics {
  bool ok = true;
  BranchingViolation violation;
  std::vector<Time> start, arrival;
  std::vector<Dist> wait, travelling, hops;
};

ChainMetrics resolve_chains(const TemporalGraph& g, const Branching& b) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ChainMetrics m;
  m.start.assign(n, 0);
  m.arrival.assign(n, 0);
  m.wait.assign(n, 0);
  m.travelling.assign(n, 0);
  m.hops.assign(n, 0);

  enum : char { kUntouched, kInProgress, kDone };
  std::vector<char> state(n, kUntouched);
  state[static_cast<std::size_t>(b.root)] = kDone;

  for (const BranchingEntry& top : b.parents) {
    std::vector<VertexId> chain;
    VertexId v = top.vertex;
    while (state[static_cast<std::size_t>(v)] == kUntouched) {
      state[static_cast<std::size_t>(v)] = kInProgress;
      chain.push_back(v);
      v = g.arc(b.entry(v)->arc).tail;
    }
    if (state[static_cast<std::size_t>(v)] == kInProgress) {
      m.ok = false;
      m.violation = {"parent arcs contain a cycle (member unreachable from root)",
                     v, b.entry(v)->arc};
      return m;
    }
    // Unwind from the resolved ancestor down to the member.
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const VertexId w = *it;
      const BranchingEntry* e = b.entry(w);
      const TemporalArc& a = g.arc(e->arc);
      const auto wi = static_cast<std::size_t>(w);
      const auto ui = static_cast<std::size_t>(a.tail);
      const bool tail_is_root = a.tail == b.root;
      if (!tail_is_root && a.t_start < m.arrival[ui]) {
        m.ok = false;
        m.violation = {"parent chain is not a temporal walk", w, e->arc};
        return m;
      }
      m.start[wi] = tail_is_root ? a.t_start : m.start[ui];
      m.wait[wi] = tail_is_root ? 0 : m.wait[ui] + (a.t_start - m.arrival[ui]);
      m.arrival[wi] = a.t_arrive;
      m.travelling[wi] = m.travelling[ui] + a.elapsed();
      m.hops[wi] = m.hops[ui] + 1;
      state[wi] = kDone;
    }
  }
  return m;
}

Dist chain_measure(const ChainMetrics& m, VertexId v, DistanceKind kind) {
  const auto i = static_cast<std::size_t>(v);
  switch (kind) {
    case DistanceKind::EarliestArrival: return m.arrival[i];
    case DistanceKind::FastestTime: return m.arrival[i] - m.start[i];
    case DistanceKind::LatestDeparture: return m.start[i];
    case DistanceKind::MinimumTransfers: return m.hops[i];
    case DistanceKind::MinimumWaiting: return m.wait[i];
    case DistanceKind::ShortestTravelling: return m.travelling[i];
  }
  return 0;
}

std::optional<BranchingViolation> structural_check(const TemporalGraph& g,
                                                   const Branching& b) {
  if (!g.contains_vertex(b.root)) {
    return BranchingViolation{"root is not a vertex of the graph", b.root, kNoArc};
  }
  VertexId prev = kNoVertex;
  for (const BranchingEntry& e : b.parents) {
    if (!g.contains_vertex(e.vertex)) {
      return BranchingViolation{"member is not a vertex of the graph", e.vertex, e.arc};
    }
    if (e.vertex == b.root) {
      return BranchingViolation{"root has an incoming parent arc", e.vertex, e.arc};
    }
    if (e.vertex <= prev) {
      return BranchingViolation{"members out of order or in-degree above one",
                                e.vertex, e.arc};
    }
    prev = e.vertex;
    if (e.arc < 0 || e.arc >= g.arc_count()) {
      return BranchingViolation{"parent arc id out of range", e.vertex, e.arc};
    }
    const TemporalArc& a = g.arc(e.arc);
    if (a.head != e.vertex) {
      return BranchingViolation{"parent arc does not enter its member", e.vertex, e.arc};
    }
  }
  for (const BranchingEntry& e : b.parents) {
    const TemporalArc& a = g.arc(e.arc);
    if (!b.is_member(a.tail)) {
      return BranchingViolation{"parent arc tail is not a member", e.vertex, e.arc};
    }
  }
  return std::nullopt;
}

}  // namespace

TobReport verify_tob(const TemporalGraph& graph, const Branching& b) {
  TobReport report;
  report.violation = structural_check(graph, b);
  if (report.violation.has_value()) return report;
  ChainMetrics m = resolve_chains(graph, b);
  if (!m.ok) report.violation = m.violation;
  return report;
}

DTobReport verify_d_tob(const TemporalGraph& graph, const Branching& b,
                        DistanceKind kind) {
  DTobReport report;
  TobReport tob = verify_tob(graph, b);
  if (!tob.ok()) {
    report.violation = tob.violation;
    return report;
  }
  report.spanning = b.spanning(graph);

  const ChainMetrics m = resolve_chains(graph, b);
  const DistanceWithEad both = single_source_with_ead(graph, b.root, kind);
  report.ead = true;
  for (const BranchingEntry& e : b.parents) {
    if (chain_measure(m, e.vertex, kind) != both.dist[e.vertex]) {
      report.violation = {"member walk does not realize the distance", e.vertex, e.arc};
      report.ead = false;
      return report;
    }
    if (static_cast<Dist>(m.arrival[static_cast<std::size_t>(e.vertex)]) !=
        both.ead[e.vertex]) {
      report.ead = false;
    }
  }
  return report;
}

TobReport verify_tib(const TemporalGraph& graph, const Branching& b) {
  return verify_tob(reverse(graph), b);
}

DTobReport verify_d_tib(const TemporalGraph& graph, const Branching& b,
                        DistanceKind kind) {
  DistanceKind mapped = kind;
  if (kind == DistanceKind::EarliestArrival) mapped = DistanceKind::LatestDeparture;
  if (kind == DistanceKind::LatestDeparture) mapped = DistanceKind::EarliestArrival;
  return verify_d_tob(reverse(graph), b, mapped);
}

Branching spanning_tob(const TemporalGraph& graph, VertexId root) {
  graph.require_vertex_id(root);
  const EaTree tree = earliest_arrival_tree(graph, root);
  Branching b;
  b.root = root;
  b.kind = DistanceKind::EarliestArrival;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v == root || tree.arrival[static_cast<std::size_t>(v)] == kUnreachable) continue;
    b.parents.push_back({v, tree.parent[static_cast<std::size_t>(v)],
                         tree.arrival[static_cast<std::size_t>(v)],
                         tree.arrival[static_cast<std::size_t>(v)]});
  }
  return b;
}

Branching max_mt_tob(const TemporalGraph& graph, VertexId root) {
  graph.require_vertex_id(root);
  const DistanceVector d = single_source(graph, root, DistanceKind::MinimumTransfers);

  // Vertices bucketed by hop level.
  Dist max_level = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (d[v] != kUnreachable) max_level = std::max(max_level, d[v]);
  }
  std::vector<std::vector<VertexId>> levels(static_cast<std::size_t>(max_level) + 1);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v != root && d[v] != kUnreachable) {
      levels[static_cast<std::size_t>(d[v])].push_back(v);
    }
  }

  std::vector<Dist> eamt(static_cast<std::size_t>(graph.vertex_count()), kUnreachable);
  eamt[static_cast<std::size_t>(root)] = 0;
  Branching b;
  b.root = root;
  b.kind = DistanceKind::MinimumTransfers;
  for (Dist level = 1; level <= max_level; ++level) {
    for (VertexId v : levels[static_cast<std::size_t>(level)]) {
      ArcId chosen = kNoArc;
      Dist best_arrival = kUnreachable;
      for (ArcId id : graph.in_arcs(v)) {
        const TemporalArc& a = graph.arc(id);
        if (d[a.tail] != level - 1) continue;
        const Dist ready = eamt[static_cast<std::size_t>(a.tail)];
        if (ready == kUnreachable || a.t_start < ready) continue;
        if (a.t_arrive < best_arrival) {  // ties keep the smaller arc id
          best_arrival = a.t_arrive;
          chosen = id;
        }
      }
      if (chosen != kNoArc) {
        eamt[static_cast<std::size_t>(v)] = best_arrival;
        b.parents.push_back({v, chosen, level, best_arrival});
      }
    }
  }
  std::sort(b.parents.begin(), b.parents.end(),
            [](const BranchingEntry& x, const BranchingEntry& y) {
              return x.vertex < y.vertex;
            });
  return b;
}

Branching max_ld_st_tob(const TemporalGraph& graph, VertexId root,
                        DistanceKind kind) {
  if (kind != DistanceKind::LatestDeparture &&
      kind != DistanceKind::ShortestTravelling) {
    throw std::invalid_argument("max_ld_st_tob requires kind LD or ST");
  }
  graph.require_vertex_id(root);
  const bool st = kind == DistanceKind::ShortestTravelling;

  std::vector<Dist> d = single_source(graph, root, kind).value;
  d[static_cast<std::size_t>(root)] = 0;  // the root occupies its own level

  std::vector<Dist> level_values;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (d[static_cast<std::size_t>(v)] != kUnreachable) {
      level_values.push_back(d[static_cast<std::size_t>(v)]);
    }
  }
  std::sort(level_values.begin(), level_values.end());
  level_values.erase(std::unique(level_values.begin(), level_values.end()),
                     level_values.end());

  std::vector<std::vector<VertexId>> level_members(level_values.size());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v == root || d[static_cast<std::size_t>(v)] == kUnreachable) continue;
    const auto it = std::lower_bound(level_values.begin(), level_values.end(),
                                     d[static_cast<std::size_t>(v)]);
    level_members[static_cast<std::size_t>(it - level_values.begin())].push_back(v);
  }

  std::vector<Dist> ead(static_cast<std::size_t>(graph.vertex_count()), kUnreachable);
  ead[static_cast<std::size_t>(root)] = 0;
  Branching b;
  b.root = root;
  b.kind = kind;

  using QueueEntry = std::pair<Dist, ArcId>;  // (arrival, arc id)
  std::vector<bool> enqueued(static_cast<std::size_t>(graph.arc_count()), false);

  for (std::size_t li = 0; li < level_values.size(); ++li) {
    const Dist di = level_values[li];
    if (level_members[li].empty()) continue;

    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    auto enqueue = [&](ArcId id) {
      if (!enqueued[static_cast<std::size_t>(id)]) {
        enqueued[static_cast<std::size_t>(id)] = true;
        queue.push({graph.arc(id).t_arrive, id});
      }
    };

    if (!st) {
      // Arcs leaving the root at exactly the level's departure time; heads
      // restricted to the level so that every accepted walk is
      // prefix-optimal.
      for (ArcId id : graph.out_arcs(root)) {
        const TemporalArc& a = graph.arc(id);
        if (a.t_start == di && d[static_cast<std::size_t>(a.head)] == di) enqueue(id);
      }
    } else {
      // Arcs from strictly earlier levels into this one; the root's own
      // level precedes every value level.
      for (VertexId v : level_members[li]) {
        for (ArcId id : graph.in_arcs(v)) {
          const TemporalArc& a = graph.arc(id);
          if (a.tail == root || d[static_cast<std::size_t>(a.tail)] < di) enqueue(id);
        }
      }
    }

    while (!queue.empty()) {
      const auto [arrival, id] = queue.top();
      queue.pop();
      const TemporalArc& a = graph.arc(id);
      const Dist ready = ead[static_cast<std::size_t>(a.tail)];
      if (ready == kUnreachable || a.t_start < ready) continue;
      if (ead[static_cast<std::size_t>(a.head)] != kUnreachable &&
          arrival >= ead[static_cast<std::size_t>(a.head)]) {
        continue;
      }
      if (st && a.elapsed() != di - d[static_cast<std::size_t>(a.tail)]) continue;

      ead[static_cast<std::size_t>(a.head)] = arrival;
      b.parents.push_back({a.head, id, di, arrival});
      for (ArcId out : graph.out_arcs(a.head)) {
        if (d[static_cast<std::size_t>(graph.arc(out).head)] == di &&
            graph.arc(out).head != root) {
          enqueue(out);
        }
      }
    }
  }

  std::sort(b.parents.begin(), b.parents.end(),
            [](const BranchingEntry& x, const BranchingEntry& y) {
              return x.vertex < y.vertex;
            });
  return b;
}

std::vector<VertexId> max_dtob_vertexset_oracle(const TemporalGraph& graph,
                                                VertexId root, DistanceKind kind,
                                                const EnumerationOptions& options) {
  if (kind != DistanceKind::LatestDeparture &&
      kind != DistanceKind::MinimumTransfers &&
      kind != DistanceKind::ShortestTravelling) {
    throw std::invalid_argument("vertex-set oracle requires kind LD, MT or ST");
  }
  graph.require_vertex_id(root);
  const DistanceVector dist = oracle_single_source(graph, root, kind, options);
  std::vector<VertexId> members;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v == root) {
      members.push_back(v);
      continue;
    }
    for (const TemporalWalk& path : enumerate_temporal_paths(graph, root, v, options)) {
      if (is_prefix_optimal(graph, dist, path)) {
        members.push_back(v);
        break;
      }
    }
  }
  return members;
}

namespace {

// Start time of each member's unique walk, resolved root-down.
std::vector<Time> chain_starts(const TemporalGraph& g, const Branching& b) {
  ChainMetrics m = resolve_chains(g, b);
  return std::move(m.start);
}

}  // namespace

Branching tib_from_reverse_tob(const TemporalGraph& graph, const Branching& rev_tob,
                               DistanceKind kind) {
  const TemporalGraph rev = reverse(graph);
  const Time tau = graph.lifetime();
  const std::vector<Time> starts = chain_starts(rev, rev_tob);
  Branching tib;
  tib.root = rev_tob.root;
  tib.kind = kind;
  for (const BranchingEntry& e : rev_tob.parents) {
    Dist dist = e.dist;
    if (kind == DistanceKind::EarliestArrival || kind == DistanceKind::LatestDeparture) {
      dist = tau + 1 - e.dist;
    }
    const Dist arrival_at_root = tau + 1 - starts[static_cast<std::size_t>(e.vertex)];
    tib.parents.push_back({e.vertex, e.arc, dist, arrival_at_root});
  }
  return tib;
}

Branching max_d_tib(const TemporalGraph& graph, VertexId root, DistanceKind kind) {
  if (kind == DistanceKind::FastestTime || kind == DistanceKind::MinimumWaiting) {
    throw std::invalid_argument(
        "maximum FT/MW in-branchings are not polynomial here; use the "
        "hardness oracle (brute_max_dtob on the reverse graph)");
  }
  graph.require_vertex_id(root);
  const TemporalGraph rev = reverse(graph);
  DistanceKind mapped = kind;
  if (kind == DistanceKind::EarliestArrival) mapped = DistanceKind::LatestDeparture;
  if (kind == DistanceKind::LatestDeparture) mapped = DistanceKind::EarliestArrival;

  Branching tob;
  switch (mapped) {
    case DistanceKind::EarliestArrival: tob = spanning_tob(rev, root); break;
    case DistanceKind::MinimumTransfers: tob = max_mt_tob(rev, root); break;
    default: tob = max_ld_st_tob(rev, root, mapped); break;
  }
  return tib_from_reverse_tob(graph, tob, kind);
}

std::optional<Branching> ft_mw_poly_cases(const TemporalGraph& graph,
                                          VertexId root, DistanceKind kind) {
  if (kind != DistanceKind::FastestTime && kind != DistanceKind::MinimumWaiting) {
    throw std::invalid_argument("ft_mw_poly_cases requires kind FT or MW");
  }
  graph.require_vertex_id(root);
  const Time tau = graph.lifetime();
  const bool ft = kind == DistanceKind::FastestTime;

  if (tau == 1) {
    Branching b = spanning_tob(graph, root);
    b.kind = kind;
    for (BranchingEntry& e : b.parents) e.dist = 0;
    return b;
  }

  bool all_elapsed_positive = true;
  for (const TemporalArc& a : graph.arcs()) {
    if (a.elapsed() == 0) all_elapsed_positive = false;
  }
  if (!all_elapsed_positive || (tau != 2 && tau != 3)) return std::nullopt;

  Branching b;
  b.root = root;
  b.kind = kind;

  if (tau == 2) {
    // Every arc is (1,2); only direct arcs from the root can be in a TOB.
    std::vector<bool> taken(static_cast<std::size_t>(graph.vertex_count()), false);
    for (ArcId id : graph.out_arcs(root)) {
      const TemporalArc& a = graph.arc(id);
      if (!taken[static_cast<std::size_t>(a.head)]) {
        taken[static_cast<std::size_t>(a.head)] = true;
        b.parents.push_back({a.head, id, ft ? 1 : 0, a.t_arrive});
      }
    }
  } else {
    // tau == 3: labels come from {(1,2),(2,3),(1,3)}; first direct arcs by
    // preference (1,2), (2,3), (1,3), then two-hop walks (1,2)+(2,3).
    const auto n = static_cast<std::size_t>(graph.vertex_count());
    std::vector<bool> taken(n, false);
    std::vector<VertexId> hop_one;  // heads of (1,2) root arcs, in take order
    auto take_direct = [&](Time s, Time t, Dist dist_value) {
      for (ArcId id : graph.out_arcs(root)) {
        const TemporalArc& a = graph.arc(id);
        if (a.t_start != s || a.t_arrive != t) continue;
        if (taken[static_cast<std::size_t>(a.head)]) continue;
        taken[static_cast<std::size_t>(a.head)] = true;
        b.parents.push_back({a.head, id, dist_value, t});
        if (s == 1 && t == 2) hop_one.push_back(a.head);
      }
    };
    take_direct(1, 2, ft ? 1 : 0);
    take_direct(2, 3, ft ? 1 : 0);
    take_direct(1, 3, ft ? 2 : 0);
    for (VertexId u : hop_one) {
      for (ArcId id : graph.out_arcs(u)) {
        const TemporalArc& a = graph.arc(id);
        if (a.t_start != 2 || a.t_arrive != 3) continue;
        if (a.head == root || taken[static_cast<std::size_t>(a.head)]) continue;
        taken[static_cast<std::size_t>(a.head)] = true;
        b.parents.push_back({a.head, id, ft ? 2 : 0, 3});
      }
    }
  }
  std::sort(b.parents.begin(), b.parents.end(),
            [](const BranchingEntry& x, const BranchingEntry& y) {
              return x.vertex < y.vertex;
            });
  return b;
}

}  // namespace tgb
