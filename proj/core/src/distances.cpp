#include "tgb/distances.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tgb {
namespace {

// Arc ids sorted by (t_start, arc id); groups of equal t_start are scanned
// together so that chains of zero-elapsed arcs inside one time step settle
// before the next group starts.
std::vector<ArcId> arcs_by_start(const TemporalGraph& g) {
  std::vector<ArcId> order(static_cast<std::size_t>(g.arc_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ArcId a, ArcId b) {
    return g.arc(a).t_start < g.arc(b).t_start;
  });
  return order;
}

// ---------------------------------------------------------------------------
// Earliest arrival: one pass over arcs in nondecreasing start time. Within a
// start-time group, zero-elapsed arcs can enable each other; a FIFO worklist
// rescans the group arcs of vertices that just became catchable.
// ---------------------------------------------------------------------------
EaTree ea_scan(const TemporalGraph& g, VertexId root) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  EaTree tree;
  tree.arrival.assign(n, kUnreachable);
  tree.parent.assign(n, kNoArc);
  tree.arrival[static_cast<std::size_t>(root)] = 0;

  const std::vector<ArcId> order = arcs_by_start(g);
  std::size_t i = 0;
  while (i < order.size()) {
    const Time s = g.arc(order[i]).t_start;
    std::size_t j = i;
    while (j < order.size() && g.arc(order[j]).t_start == s) ++j;

    std::unordered_map<VertexId, std::vector<ArcId>> group_out;
    std::deque<VertexId> cascade;
    std::vector<bool> queued_marker;  // lazily sized when cascade is needed

    auto fire = [&](ArcId id) {
      const TemporalArc& a = g.arc(id);
      if (tree.arrival[static_cast<std::size_t>(a.tail)] > s) return;
      auto& arr = tree.arrival[static_cast<std::size_t>(a.head)];
      if (a.t_arrive < arr) {
        arr = a.t_arrive;
        tree.parent[static_cast<std::size_t>(a.head)] = id;
        if (a.t_arrive == s) {
          if (queued_marker.empty()) queued_marker.assign(n, false);
          if (!queued_marker[static_cast<std::size_t>(a.head)]) {
            queued_marker[static_cast<std::size_t>(a.head)] = true;
            cascade.push_back(a.head);
          }
        }
      }
    };

    for (std::size_t k = i; k < j; ++k) {
      group_out[g.arc(order[k]).tail].push_back(order[k]);
      fire(order[k]);
    }
    while (!cascade.empty()) {
      const VertexId v = cascade.front();
      cascade.pop_front();
      queued_marker[static_cast<std::size_t>(v)] = false;
      auto it = group_out.find(v);
      if (it == group_out.end()) continue;
      for (ArcId id : it->second) fire(id);
    }
    i = j;
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Minimum transfers: breadth-first over hop levels. minArr(v) is the best
// arrival over walks of at most the current number of hops; an out-arc is
// enabled once its start time reaches that bound (suffix of the per-vertex
// arc list sorted by descending start). The first level that reaches a vertex
// is its MT value and the level-end arrival bound is its EAMT value.
// ---------------------------------------------------------------------------
struct MtResult {
  std::vector<Dist> hops;     // kUnreachable if never reached
  std::vector<Dist> ead;      // arrival bound at the first-reach level
  std::vector<Dist> min_arr;  // final arrival bound (any number of hops)
};

MtResult mt_levels(const TemporalGraph& g, VertexId root) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  MtResult res;
  res.hops.assign(n, kUnreachable);
  res.ead.assign(n, kUnreachable);
  res.min_arr.assign(n, kUnreachable);
  res.hops[static_cast<std::size_t>(root)] = 0;
  res.ead[static_cast<std::size_t>(root)] = 0;
  res.min_arr[static_cast<std::size_t>(root)] = 0;

  // Per-vertex out arcs sorted by descending start time (arc id breaks ties)
  // so the enabled set grows as the arrival bound decreases.
  std::vector<std::vector<ArcId>> out_sorted(n);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto arcs = g.out_arcs(v);
    out_sorted[static_cast<std::size_t>(v)].assign(arcs.begin(), arcs.end());
    std::stable_sort(out_sorted[static_cast<std::size_t>(v)].begin(),
                     out_sorted[static_cast<std::size_t>(v)].end(),
                     [&](ArcId a, ArcId b) { return g.arc(a).t_start > g.arc(b).t_start; });
  }
  std::vector<std::size_t> enabled(n, 0);

  std::vector<std::pair<VertexId, Dist>> current = {{root, 0}};
  std::vector<Dist> pending(n, kUnreachable);
  std::vector<VertexId> pending_list;
  Dist level = 0;
  while (!current.empty()) {
    ++level;
    pending_list.clear();
    for (auto [u, bound] : current) {
      auto& lst = out_sorted[static_cast<std::size_t>(u)];
      auto& ptr = enabled[static_cast<std::size_t>(u)];
      while (ptr < lst.size() && g.arc(lst[ptr]).t_start >= bound) {
        const TemporalArc& a = g.arc(lst[ptr]);
        ++ptr;
        auto& best = res.min_arr[static_cast<std::size_t>(a.head)];
        if (a.t_arrive < best) {
          best = a.t_arrive;
          auto& p = pending[static_cast<std::size_t>(a.head)];
          if (p == kUnreachable) pending_list.push_back(a.head);
          p = a.t_arrive;
        }
      }
    }
    current.clear();
    for (VertexId v : pending_list) {
      auto& h = res.hops[static_cast<std::size_t>(v)];
      if (h == kUnreachable) {
        h = level;
        res.ead[static_cast<std::size_t>(v)] = pending[static_cast<std::size_t>(v)];
      }
      current.emplace_back(v, pending[static_cast<std::size_t>(v)]);
      pending[static_cast<std::size_t>(v)] = kUnreachable;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Pareto label fronts over (arrival, payload) processed in nondecreasing
// start time, shared by the LD / ST / FT engines. A front keeps labels with
// strictly increasing arrival and strictly "better-with-later-arrival"
// payload; the best usable label for a departure at s is then the last label
// with arrival <= s.
// ---------------------------------------------------------------------------
struct Label {
  Time arrival;
  Dist payload;
};

// payload ordering: for LD the payload is the walk start (bigger is better),
// for ST the travelling time (smaller is better).
template <bool BiggerBetter>
class Front {
 public:
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }

  // Best payload among labels with arrival <= limit.
  std::optional<Dist> best_at(Time limit) const {
    auto it = std::upper_bound(labels_.begin(), labels_.end(), limit,
                               [](Time t, const Label& l) { return t < l.arrival; });
    if (it == labels_.begin()) return std::nullopt;
    return std::prev(it)->payload;
  }

  // Returns true when the label was inserted (i.e. not dominated).
  bool insert(Label label) {
    auto better = [](Dist a, Dist b) { return BiggerBetter ? a >= b : a <= b; };
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label.arrival,
                               [](const Label& l, Time t) { return l.arrival < t; });
    if (it != labels_.begin() && better(std::prev(it)->payload, label.payload)) {
      return false;
    }
    if (it != labels_.end() && it->arrival == label.arrival &&
        better(it->payload, label.payload)) {
      return false;
    }
    auto last = it;
    while (last != labels_.end() && better(label.payload, last->payload)) ++last;
    it = labels_.erase(it, last);
    labels_.insert(it, label);
    return true;
  }

  const Label& back() const { return labels_.back(); }

 private:
  std::vector<Label> labels_;
};

// Generic (start-group, cascade) driver. FireFn(arc_id, group_start) returns
// true when the head gained a label arriving exactly at the group start (a
// zero-elapsed hop that may enable other arcs of the same group).
template <typename FireFn>
void scan_groups(const TemporalGraph& g, const FireFn& fire) {
  const std::vector<ArcId> order = arcs_by_start(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::size_t i = 0;
  while (i < order.size()) {
    const Time s = g.arc(order[i]).t_start;
    std::size_t j = i;
    while (j < order.size() && g.arc(order[j]).t_start == s) ++j;

    std::unordered_map<VertexId, std::vector<ArcId>> group_out;
    std::deque<VertexId> cascade;
    std::vector<bool> queued;

    auto offer = [&](ArcId id) {
      const TemporalArc& a = g.arc(id);
      if (fire(id, s)) {
        if (queued.empty()) queued.assign(n, false);
        if (!queued[static_cast<std::size_t>(a.head)]) {
          queued[static_cast<std::size_t>(a.head)] = true;
          cascade.push_back(a.head);
        }
      }
    };

    for (std::size_t k = i; k < j; ++k) {
      group_out[g.arc(order[k]).tail].push_back(order[k]);
      offer(order[k]);
    }
    while (!cascade.empty()) {
      const VertexId v = cascade.front();
      cascade.pop_front();
      queued[static_cast<std::size_t>(v)] = false;
      auto it = group_out.find(v);
      if (it == group_out.end()) continue;
      for (ArcId id : it->second) offer(id);
    }
    i = j;
  }
}

struct LdResult {
  std::vector<Front<true>> fronts;  // payload = walk start
};

LdResult ld_fronts(const TemporalGraph& g, VertexId root) {
  LdResult res;
  res.fronts.resize(static_cast<std::size_t>(g.vertex_count()));
  scan_groups(g, [&](ArcId id, Time s) {
    const TemporalArc& a = g.arc(id);
    Dist start;
    if (a.tail == root) {
      // A fresh departure from the root dominates any walk returning to it.
      start = s;
    } else {
      auto best = res.fronts[static_cast<std::size_t>(a.tail)].best_at(s);
      if (!best.has_value()) return false;
      start = *best;
    }
    const bool inserted =
        res.fronts[static_cast<std::size_t>(a.head)].insert({a.t_arrive, start});
    return inserted && a.t_arrive == s;
  });
  return res;
}

struct StResult {
  std::vector<Front<false>> fronts;  // payload = travelling time
};

StResult st_fronts(const TemporalGraph& g, VertexId root) {
  StResult res;
  res.fronts.resize(static_cast<std::size_t>(g.vertex_count()));
  res.fronts[static_cast<std::size_t>(root)].insert({0, 0});
  scan_groups(g, [&](ArcId id, Time s) {
    const TemporalArc& a = g.arc(id);
    auto best = res.fronts[static_cast<std::size_t>(a.tail)].best_at(s);
    if (!best.has_value()) return false;
    const bool inserted = res.fronts[static_cast<std::size_t>(a.head)].insert(
        {a.t_arrive, *best + a.elapsed()});
    return inserted && a.t_arrive == s;
  });
  return res;
}

// FT keeps per vertex the nondominated (start, arrival) pairs: arrival
// strictly increasing, start strictly increasing.
struct FtResult {
  std::vector<Front<true>> fronts;  // arrival-indexed, payload = start
};

FtResult ft_fronts(const TemporalGraph& g, VertexId root) {
  FtResult res;
  res.fronts.resize(static_cast<std::size_t>(g.vertex_count()));
  scan_groups(g, [&](ArcId id, Time s) {
    const TemporalArc& a = g.arc(id);
    Dist start;
    if (a.tail == root) {
      start = s;
    } else {
      auto best = res.fronts[static_cast<std::size_t>(a.tail)].best_at(s);
      if (!best.has_value()) return false;
      start = *best;
    }
    const bool inserted =
        res.fronts[static_cast<std::size_t>(a.head)].insert({a.t_arrive, start});
    return inserted && a.t_arrive == s;
  });
  return res;
}

// ---------------------------------------------------------------------------
// Minimum waiting time. The optimum ranges over walks (a detour can strictly
// lower the wait), so labels are (arrival, wait) pairs relaxed to a fixed
// point. A label is kept unless another one is at least as good in arrival,
// in wait, and in wait-minus-arrival (the part future extensions pay for).
// ---------------------------------------------------------------------------
struct MwResult {
  std::vector<std::vector<Label>> labels;  // payload = wait
};

MwResult mw_labels(const TemporalGraph& g, VertexId root) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  MwResult res;
  res.labels.resize(n);

  auto dominated = [](const Label& cand, const Label& by) {
    return by.arrival <= cand.arrival && by.payload <= cand.payload &&
           by.payload - by.arrival <= cand.payload - cand.arrival;
  };

  auto insert = [&](VertexId v, Label cand) {
    auto& set = res.labels[static_cast<std::size_t>(v)];
    for (const Label& l : set) {
      if (dominated(cand, l)) return false;
    }
    std::erase_if(set, [&](const Label& l) { return dominated(l, cand); });
    set.push_back(cand);
    return true;
  };

  std::deque<VertexId> queue;
  std::vector<bool> queued(n, false);
  auto push = [&](VertexId v) {
    if (!queued[static_cast<std::size_t>(v)]) {
      queued[static_cast<std::size_t>(v)] = true;
      queue.push_back(v);
    }
  };
  push(root);

  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(u)] = false;
    for (ArcId id : g.out_arcs(u)) {
      const TemporalArc& a = g.arc(id);
      Dist wait = kUnreachable;
      if (u == root) {
        wait = 0;  // first arc of a walk pays no junction gap
      } else {
        for (const Label& l : res.labels[static_cast<std::size_t>(u)]) {
          if (l.arrival <= a.t_start) {
            wait = std::min(wait, l.payload + (a.t_start - l.arrival));
          }
        }
        if (wait == kUnreachable) continue;
      }
      if (insert(a.head, {a.t_arrive, wait})) push(a.head);
    }
  }
  return res;
}

Dist min_wait(const MwResult& res, VertexId v) {
  Dist best = kUnreachable;
  for (const Label& l : res.labels[static_cast<std::size_t>(v)]) {
    best = std::min(best, l.payload);
  }
  return best;
}

}  // namespace

EaTree earliest_arrival_tree(const TemporalGraph& graph, VertexId root) {
  graph.require_vertex_id(root);
  return ea_scan(graph, root);
}

DistanceWithEad single_source_with_ead(const TemporalGraph& graph, VertexId root,
                                       DistanceKind kind) {
  graph.require_vertex_id(root);
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  DistanceWithEad out;
  out.dist.root = root;
  out.dist.kind = kind;
  out.dist.value.assign(n, kUnreachable);
  out.ead.root = root;
  out.ead.kind = kind;
  out.ead.arrival.assign(n, kUnreachable);

  switch (kind) {
    case DistanceKind::EarliestArrival: {
      const EaTree tree = ea_scan(graph, root);
      out.dist.value = tree.arrival;
      out.ead.arrival = tree.arrival;
      break;
    }
    case DistanceKind::MinimumTransfers: {
      const MtResult res = mt_levels(graph, root);
      out.dist.value = res.hops;
      out.ead.arrival = res.ead;
      break;
    }
    case DistanceKind::LatestDeparture: {
      const LdResult res = ld_fronts(graph, root);
      for (std::size_t v = 0; v < n; ++v) {
        if (!res.fronts[v].empty()) {
          out.dist.value[v] = res.fronts[v].back().payload;
          out.ead.arrival[v] = res.fronts[v].back().arrival;
        }
      }
      out.dist.value[static_cast<std::size_t>(root)] = graph.lifetime() + 1;
      out.ead.arrival[static_cast<std::size_t>(root)] = 0;
      break;
    }
    case DistanceKind::ShortestTravelling: {
      const StResult res = st_fronts(graph, root);
      for (std::size_t v = 0; v < n; ++v) {
        if (!res.fronts[v].empty()) {
          out.dist.value[v] = res.fronts[v].back().payload;
          out.ead.arrival[v] = res.fronts[v].back().arrival;
        }
      }
      break;
    }
    case DistanceKind::FastestTime: {
      const FtResult res = ft_fronts(graph, root);
      for (std::size_t v = 0; v < n; ++v) {
        Dist dur = kUnreachable;
        Dist ead = kUnreachable;
        for (const Label& l : res.fronts[v].labels()) {
          const Dist d = l.arrival - l.payload;
          if (d < dur) {
            dur = d;
            ead = l.arrival;
          } else if (d == dur && l.arrival < ead) {
            ead = l.arrival;
          }
        }
        out.dist.value[v] = dur;
        out.ead.arrival[v] = ead;
      }
      out.dist.value[static_cast<std::size_t>(root)] = 0;
      out.ead.arrival[static_cast<std::size_t>(root)] = 0;
      break;
    }
    case DistanceKind::MinimumWaiting: {
      const MwResult res = mw_labels(graph, root);
      for (std::size_t v = 0; v < n; ++v) {
        const Dist w = min_wait(res, static_cast<VertexId>(v));
        out.dist.value[v] = w;
        if (w == kUnreachable) continue;
        Dist ead = kUnreachable;
        for (const Label& l : res.labels[v]) {
          if (l.payload == w) ead = std::min(ead, static_cast<Dist>(l.arrival));
        }
        out.ead.arrival[v] = ead;
      }
      out.dist.value[static_cast<std::size_t>(root)] = 0;
      out.ead.arrival[static_cast<std::size_t>(root)] = 0;
      break;
    }
  }
  return out;
}

DistanceVector single_source(const TemporalGraph& graph, VertexId root,
                             DistanceKind kind) {
  return single_source_with_ead(graph, root, kind).dist;
}

EadVector single_source_ead(const TemporalGraph& graph, VertexId root,
                            DistanceKind kind) {
  return single_source_with_ead(graph, root, kind).ead;
}

}  // namespace tgb
