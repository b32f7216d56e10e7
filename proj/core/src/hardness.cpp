#include "tgb/hardness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace tgb {
namespace {

Dist measure_value(Time arrival, Time start, Dist wait, Dist travelling, Dist hops,
                   DistanceKind kind) {
  switch (kind) {
    case DistanceKind::EarliestArrival: return arrival;
    case DistanceKind::FastestTime: return arrival - start;
    case DistanceKind::LatestDeparture: return start;
    case DistanceKind::MinimumTransfers: return hops;
    case DistanceKind::MinimumWaiting: return wait;
    case DistanceKind::ShortestTravelling: return travelling;
  }
  return 0;
}

// Backtracking construction of a kind-TOB over exactly the vertex set
// `in_set`. Trees are enumerated once each: members enter in the canonical
// order sorted by (walk arrival, hops, parent arc id), which always lists a
// parent before its children.
class TobSearch {
 public:
  TobSearch(const TemporalGraph& g, VertexId root, DistanceKind kind,
            const DistanceVector& target, const std::vector<bool>& in_set)
      : g_(g), root_(root), kind_(kind), target_(target), in_set_(in_set) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    added_.assign(n, false);
    arrival_.assign(n, 0);
    start_.assign(n, 0);
    wait_.assign(n, 0);
    travelling_.assign(n, 0);
    hops_.assign(n, 0);
    added_[static_cast<std::size_t>(root)] = true;
    need_ = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v != root && in_set[static_cast<std::size_t>(v)]) ++need_;
    }
  }

  std::optional<Branching> run() {
    parents_.clear();
    if (!extend(0, -1, kNoArc)) return std::nullopt;
    Branching b;
    b.root = root_;
    b.kind = kind_;
    for (auto [v, arc] : parents_) {
      b.parents.push_back({v, arc, target_[v],
                           arrival_[static_cast<std::size_t>(v)]});
    }
    std::sort(b.parents.begin(), b.parents.end(),
              [](const BranchingEntry& x, const BranchingEntry& y) {
                return x.vertex < y.vertex;
              });
    return b;
  }

 private:
  bool extend(Time last_arrival, Dist last_hops, ArcId last_arc) {
    if (parents_.size() == need_) return true;
    for (ArcId id = 0; id < g_.arc_count(); ++id) {
      const TemporalArc& a = g_.arc(id);
      const auto ui = static_cast<std::size_t>(a.tail);
      const auto vi = static_cast<std::size_t>(a.head);
      if (!added_[ui] || added_[vi] || !in_set_[vi]) continue;
      if (a.t_start < arrival_[ui] && a.tail != root_) continue;
      const Dist hops = hops_[ui] + 1;
      if (std::tuple(a.t_arrive, hops, id) <=
          std::tuple(static_cast<Time>(last_arrival), last_hops, last_arc)) {
        continue;
      }
      const Time start = a.tail == root_ ? a.t_start : start_[ui];
      const Dist wait = a.tail == root_ ? 0 : wait_[ui] + (a.t_start - arrival_[ui]);
      const Dist travelling = travelling_[ui] + a.elapsed();
      if (measure_value(a.t_arrive, start, wait, travelling, hops, kind_) !=
          target_[a.head]) {
        continue;
      }
      added_[vi] = true;
      arrival_[vi] = a.t_arrive;
      start_[vi] = start;
      wait_[vi] = wait;
      travelling_[vi] = travelling;
      hops_[vi] = hops;
      parents_.emplace_back(a.head, id);
      if (extend(a.t_arrive, hops, id)) return true;
      parents_.pop_back();
      added_[vi] = false;
    }
    return false;
  }

  const TemporalGraph& g_;
  VertexId root_;
  DistanceKind kind_;
  const DistanceVector& target_;
  const std::vector<bool>& in_set_;
  std::vector<bool> added_;
  std::vector<Time> arrival_, start_;
  std::vector<Dist> wait_, travelling_, hops_;
  std::vector<std::pair<VertexId, ArcId>> parents_;
  std::size_t need_ = 0;
};

// Lexicographic combinations of {0..pool-1} of a fixed size.
class Combinations {
 public:
  Combinations(std::size_t pool, std::size_t size) : pool_(pool) {
    index_.resize(size);
    for (std::size_t i = 0; i < size; ++i) index_[i] = i;
    valid_ = size <= pool;
  }

  bool valid() const { return valid_; }
  const std::vector<std::size_t>& current() const { return index_; }

  void next() {
    if (index_.empty()) {
      valid_ = false;
      return;
    }
    std::size_t i = index_.size();
    while (i > 0) {
      --i;
      if (index_[i] + (index_.size() - i) < pool_) {
        ++index_[i];
        for (std::size_t j = i + 1; j < index_.size(); ++j) {
          index_[j] = index_[j - 1] + 1;
        }
        return;
      }
    }
    valid_ = false;
  }

 private:
  std::size_t pool_;
  std::vector<std::size_t> index_;
  bool valid_ = true;
};

}  // namespace

Branching brute_max_dtob(const TemporalGraph& graph, VertexId root,
                         DistanceKind kind, const HardnessOptions& options) {
  graph.require_vertex_id(root);
  if (graph.vertex_count() > options.max_tob_vertices) {
    throw SizeGuardError("brute_max_dtob guard: " +
                         std::to_string(graph.vertex_count()) + " vertices > " +
                         std::to_string(options.max_tob_vertices));
  }
  const DistanceVector target =
      oracle_single_source(graph, root, kind, options.enumeration);

  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v != root && target[v] != kUnreachable) candidates.push_back(v);
  }

  std::vector<bool> in_set(static_cast<std::size_t>(graph.vertex_count()), false);
  in_set[static_cast<std::size_t>(root)] = true;
  for (std::size_t size = candidates.size();; --size) {
    for (Combinations combo(candidates.size(), size); combo.valid(); combo.next()) {
      for (std::size_t i : combo.current()) {
        in_set[static_cast<std::size_t>(candidates[i])] = true;
      }
      auto result = TobSearch(graph, root, kind, target, in_set).run();
      for (std::size_t i : combo.current()) {
        in_set[static_cast<std::size_t>(candidates[i])] = false;
      }
      if (result.has_value()) return *result;
    }
    if (size == 0) break;
  }
  // The singleton {root} always succeeds, so this is unreachable.
  throw std::logic_error("brute_max_dtob found no branching");
}

namespace {

using ArcMask = std::uint64_t;

ArcMask to_mask(const std::vector<ArcId>& ids) {
  ArcMask mask = 0;
  for (ArcId id : ids) mask |= ArcMask{1} << id;
  return mask;
}

struct RealizingWalks {
  std::vector<std::vector<ArcMask>> masks;       // per vertex
  std::vector<std::vector<TemporalWalk>> walks;  // aligned with masks
};

}  // namespace

std::optional<TossWitness> brute_min_dtoss(const TemporalGraph& graph,
                                           VertexId root, DistanceKind kind,
                                           std::int64_t k,
                                           const HardnessOptions& options) {
  graph.require_vertex_id(root);
  const ArcId m = graph.arc_count();
  if (m > options.max_toss_arcs) {
    throw SizeGuardError("brute_min_dtoss guard: " + std::to_string(m) + " arcs > " +
                         std::to_string(options.max_toss_arcs));
  }
  if (m > 63) {
    throw SizeGuardError("brute_min_dtoss supports at most 63 arcs");
  }
  const DistanceVector target =
      oracle_single_source(graph, root, kind, options.enumeration);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (target[v] == kUnreachable) return std::nullopt;
  }

  RealizingWalks realizing;
  realizing.masks.resize(static_cast<std::size_t>(graph.vertex_count()));
  realizing.walks.resize(static_cast<std::size_t>(graph.vertex_count()));
  ArcMask forced = 0;
  ArcMask useful = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (v == root) continue;
    const auto walks = kind == DistanceKind::MinimumWaiting
                           ? enumerate_wait_walks(graph, root, v, options.enumeration)
                           : enumerate_temporal_paths(graph, root, v, options.enumeration);
    ArcMask common = ~ArcMask{0};
    for (const TemporalWalk& w : walks) {
      if (walk_measure(graph, w, kind) != target[v]) continue;
      const ArcMask mask = to_mask(w.arc_ids);
      realizing.masks[static_cast<std::size_t>(v)].push_back(mask);
      realizing.walks[static_cast<std::size_t>(v)].push_back(w);
      common &= mask;
      useful |= mask;
    }
    forced |= common;  // arcs on every realizing walk of v must be kept
  }

  const auto feasible = [&](ArcMask chosen) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      if (v == root) continue;
      bool covered = false;
      for (ArcMask mask : realizing.masks[static_cast<std::size_t>(v)]) {
        if ((mask & ~chosen) == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  };

  const auto budget_used = std::popcount(forced);
  if (budget_used > k) return std::nullopt;

  std::vector<ArcId> free_arcs;
  for (ArcId id = 0; id < m; ++id) {
    const ArcMask bit = ArcMask{1} << id;
    if ((useful & bit) && !(forced & bit)) free_arcs.push_back(id);
  }
  const std::size_t budget = std::min<std::size_t>(
      free_arcs.size(), static_cast<std::size_t>(k - budget_used));

  for (std::size_t size = 0; size <= budget; ++size) {
    for (Combinations combo(free_arcs.size(), size); combo.valid(); combo.next()) {
      ArcMask chosen = forced;
      for (std::size_t i : combo.current()) {
        chosen |= ArcMask{1} << free_arcs[i];
      }
      if (!feasible(chosen)) continue;

      TossWitness witness;
      for (ArcId id = 0; id < m; ++id) {
        if (chosen & (ArcMask{1} << id)) witness.arcs.push_back(id);
      }
      witness.realizing.resize(static_cast<std::size_t>(graph.vertex_count()));
      witness.realizing[static_cast<std::size_t>(root)] = TemporalWalk{root, {}};
      for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (v == root) continue;
        const auto& masks = realizing.masks[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < masks.size(); ++i) {
          if ((masks[i] & ~chosen) == 0) {
            witness.realizing[static_cast<std::size_t>(v)] =
                realizing.walks[static_cast<std::size_t>(v)][i];
            break;
          }
        }
      }
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<TossWitness> ea_toss(const TemporalGraph& graph, VertexId root) {
  const Branching b = spanning_tob(graph, root);
  if (!b.spanning(graph)) return std::nullopt;

  TossWitness witness;
  witness.realizing.resize(static_cast<std::size_t>(graph.vertex_count()));
  witness.realizing[static_cast<std::size_t>(root)] = TemporalWalk{root, {}};
  for (const BranchingEntry& e : b.parents) witness.arcs.push_back(e.arc);
  std::sort(witness.arcs.begin(), witness.arcs.end());

  // Tree walks, resolved through memoised parent chains.
  std::vector<bool> done(static_cast<std::size_t>(graph.vertex_count()), false);
  done[static_cast<std::size_t>(root)] = true;
  for (const BranchingEntry& e : b.parents) {
    std::vector<VertexId> chain;
    VertexId v = e.vertex;
    while (!done[static_cast<std::size_t>(v)]) {
      chain.push_back(v);
      v = graph.arc(b.entry(v)->arc).tail;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const BranchingEntry* entry = b.entry(*it);
      const TemporalArc& a = graph.arc(entry->arc);
      TemporalWalk walk = witness.realizing[static_cast<std::size_t>(a.tail)];
      walk.arc_ids.push_back(entry->arc);
      witness.realizing[static_cast<std::size_t>(*it)] = std::move(walk);
      done[static_cast<std::size_t>(*it)] = true;
    }
  }
  return witness;
}

namespace {

// Witness walks of the reverse graph turned back into host orientation.
TossWitness reorient_witness(TossWitness witness, const TemporalGraph& host,
                             VertexId root) {
  for (VertexId v = 0; v < host.vertex_count(); ++v) {
    auto& walk = witness.realizing[static_cast<std::size_t>(v)];
    std::reverse(walk.arc_ids.begin(), walk.arc_ids.end());
    walk.origin = v;
  }
  (void)root;
  return witness;
}

}  // namespace

std::optional<TossWitness> brute_min_dtiss(const TemporalGraph& graph,
                                           VertexId root, DistanceKind kind,
                                           std::int64_t k,
                                           const HardnessOptions& options) {
  DistanceKind mapped = kind;
  if (kind == DistanceKind::EarliestArrival) mapped = DistanceKind::LatestDeparture;
  if (kind == DistanceKind::LatestDeparture) mapped = DistanceKind::EarliestArrival;
  auto witness = brute_min_dtoss(reverse(graph), root, mapped, k, options);
  if (!witness.has_value()) return std::nullopt;
  return reorient_witness(std::move(*witness), graph, root);
}

std::optional<TossWitness> min_ld_tiss(const TemporalGraph& graph, VertexId root) {
  auto witness = ea_toss(reverse(graph), root);
  if (!witness.has_value()) return std::nullopt;
  return reorient_witness(std::move(*witness), graph, root);
}

// ---------------------------------------------------------------------------
// Reduction generators
// ---------------------------------------------------------------------------
namespace {

class GadgetBuilder {
 public:
  VertexId vertex(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const VertexId v = static_cast<VertexId>(labels_.size());
    labels_.push_back(name);
    index_.emplace(name, v);
    return v;
  }

  void arc(const std::string& u, const std::string& v, Time s, Time t) {
    arcs_.push_back({vertex(u), vertex(v), s, t});
  }

  TemporalGraph build(Time tau) {
    return TemporalGraph(std::move(labels_), std::move(arcs_), tau);
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<TemporalArc> arcs_;
};

void require_valid_formula(const CnfFormula& phi) {
  const CnfValidation check = validate(phi);
  if (!check.valid) {
    throw std::invalid_argument("invalid formula: " + check.message);
  }
}

std::string var_name(const char* prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

// Clause arcs shared by the TOSS gadgets: literal polarity picks the
// positive or negative occurrence vertex.
void add_clause_arcs(GadgetBuilder& b, const CnfFormula& phi, Time s, Time t) {
  for (int j = 1; j <= phi.clause_count(); ++j) {
    for (const Literal& lit : phi.clauses[static_cast<std::size_t>(j - 1)]) {
      const char* prefix = lit.positive ? "xp" : "xn";
      b.arc(var_name(prefix, lit.variable), var_name("c", j), s, t);
    }
  }
}

}  // namespace

ReductionInstance gen_ftmw_instance(const CnfFormula& phi, ElapsedVariant variant,
                                    bool simple) {
  require_valid_formula(phi);
  const bool el0 = variant == ElapsedVariant::Zero;
  GadgetBuilder b;
  b.vertex("r");
  const int l = phi.variable_count;

  for (int i = 1; i <= l; ++i) {
    const std::string x = var_name("x", i);
    if (!simple) {
      if (el0) {
        b.arc("r", x, 1, 1);
        b.arc("r", x, 2, 2);
      } else {
        b.arc("r", x, 1, 2);
        b.arc("r", x, 2, 3);
      }
    } else {
      const std::string y1 = var_name("y1_", i);
      const std::string y2 = var_name("y2_", i);
      if (el0) {
        b.arc("r", y1, 1, 1);
        b.arc(y1, x, 1, 1);
        b.arc("r", y2, 2, 2);
        b.arc(y2, x, 2, 2);
      } else {
        b.arc("r", y1, 1, 2);
        b.arc(y1, x, 2, 3);
        b.arc("r", y2, 2, 3);
        b.arc(y2, x, 3, 4);
      }
    }
  }
  // Clause arcs: the positive occurrence uses the early slot, the negative
  // one the late slot; the simple el1 layout shifts both by one step.
  const Time shift = (simple && !el0) ? 1 : 0;
  for (int j = 1; j <= phi.clause_count(); ++j) {
    for (const Literal& lit : phi.clauses[static_cast<std::size_t>(j - 1)]) {
      const std::string x = var_name("x", lit.variable);
      const std::string c = var_name("c", j);
      if (el0) {
        if (lit.positive) {
          b.arc(x, c, 1, 1);
        } else {
          b.arc(x, c, 2, 2);
        }
      } else {
        if (lit.positive) {
          b.arc(x, c, 2 + shift, 3 + shift);
        } else {
          b.arc(x, c, 3 + shift, 4 + shift);
        }
      }
    }
  }
  const Time tau = el0 ? 2 : (simple ? 5 : 4);
  TemporalGraph graph = b.build(tau);
  const VertexId root = graph.require_vertex("r");
  return {std::move(graph), root, std::nullopt};
}

ReductionInstance gen_st_toss_instance(const CnfFormula& phi, bool simple) {
  require_valid_formula(phi);
  GadgetBuilder b;
  b.vertex("r");
  const int l = phi.variable_count;
  const int m = phi.clause_count();

  for (int i = 1; i <= l; ++i) {
    for (const char* alpha : {"p", "n"}) {
      const std::string x = std::string("x") + alpha + std::to_string(i);
      b.arc("r", x, 1, 2);
      if (!simple) {
        b.arc("r", x, 3, 3);
      } else {
        const std::string y = std::string("y") + alpha + std::to_string(i);
        b.arc("r", y, 3, 3);
        b.arc(y, x, 3, 3);
      }
      b.arc(x, var_name("y", i), 2, 2);
    }
  }
  add_clause_arcs(b, phi, 2, 2);
  TemporalGraph graph = b.build(3);
  const VertexId root = graph.require_vertex("r");
  const std::int64_t k = simple ? 6 * l + m : 4 * l + m;
  return {std::move(graph), root, k};
}

ReductionInstance gen_ld_toss_instance(const CnfFormula& phi, ElapsedVariant variant,
                                       bool simple) {
  require_valid_formula(phi);
  const bool el0 = variant == ElapsedVariant::Zero;
  GadgetBuilder b;
  b.vertex("r");
  const int l = phi.variable_count;
  const int m = phi.clause_count();

  for (int i = 1; i <= l; ++i) {
    for (const char* alpha : {"p", "n"}) {
      const std::string x = std::string("x") + alpha + std::to_string(i);
      const std::string y_split = std::string("y") + alpha + std::to_string(i);
      const std::string z_split = std::string("z") + alpha + std::to_string(i);
      if (el0) {
        b.arc("r", x, 1, 1);
        if (!simple) {
          b.arc("r", x, 2, 2);
        } else {
          b.arc("r", y_split, 2, 2);
          b.arc(y_split, x, 2, 2);
        }
        b.arc(x, var_name("y", i), 1, 1);
      } else {
        if (!simple) {
          b.arc("r", x, 1, 2);
          b.arc("r", x, 2, 3);
          b.arc(x, var_name("y", i), 2, 3);
        } else {
          // Subdivide both root arcs and push the rest one step later.
          b.arc("r", z_split, 1, 2);
          b.arc(z_split, x, 2, 3);
          b.arc("r", y_split, 2, 3);
          b.arc(y_split, x, 3, 4);
          b.arc(x, var_name("y", i), 3, 4);
        }
      }
    }
  }
  if (el0) {
    add_clause_arcs(b, phi, 1, 1);
  } else {
    add_clause_arcs(b, phi, simple ? 3 : 2, simple ? 4 : 3);
  }
  const Time tau = el0 ? 2 : (simple ? 4 : 3);
  TemporalGraph graph = b.build(tau);
  const VertexId root = graph.require_vertex("r");
  std::int64_t k = 4 * l + m;
  if (simple) k = el0 ? 6 * l + m : 8 * l + m;
  return {std::move(graph), root, k};
}

ReductionInstance gen_mt_toss_instance(const CnfFormula& phi, ElapsedVariant variant,
                                       bool simple) {
  require_valid_formula(phi);
  (void)simple;  // the gadget is already a digraph
  const bool el0 = variant == ElapsedVariant::Zero;
  GadgetBuilder b;
  b.vertex("r");
  const int l = phi.variable_count;
  const int m = phi.clause_count();

  for (int i = 1; i <= l; ++i) {
    for (const char* alpha : {"p", "n"}) {
      const std::string x = std::string("x") + alpha + std::to_string(i);
      const std::string z = std::string("z") + alpha + std::to_string(i);
      if (el0) {
        b.arc("r", x, 2, 2);
        b.arc("r", z, 1, 1);
        b.arc(z, x, 1, 1);
        b.arc(x, var_name("y", i), 1, 1);
      } else {
        b.arc("r", x, 3, 4);
        b.arc("r", z, 1, 2);
        b.arc(z, x, 2, 3);
        b.arc(x, var_name("y", i), 3, 4);
      }
    }
  }
  add_clause_arcs(b, phi, el0 ? 1 : 3, el0 ? 1 : 4);
  TemporalGraph graph = b.build(el0 ? 2 : 4);
  const VertexId root = graph.require_vertex("r");
  return {std::move(graph), root, 6 * l + m};
}

}  // namespace tgb
