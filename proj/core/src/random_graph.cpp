#include "tgb/random_graph.hpp"

#include <random>
#include <stdexcept>

namespace tgb {

TemporalGraph random_temporal_graph(VertexId vertices, ArcId arcs, Time tau,
                                    std::uint64_t seed) {
  if (vertices < 2 || tau < 1 || arcs < 0) {
    throw std::invalid_argument("random graph needs >= 2 vertices, tau >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick_tail(0, vertices - 1);
  std::uniform_int_distribution<VertexId> pick_other(0, vertices - 2);
  // Uniform over the time triangle {(s, t): 1 <= s <= t <= tau}.
  const std::uint64_t triangle = static_cast<std::uint64_t>(tau) *
                                 static_cast<std::uint64_t>(tau + 1) / 2;
  std::uniform_int_distribution<std::uint64_t> pick_slot(0, triangle - 1);

  std::vector<TemporalArc> arc_list;
  arc_list.reserve(static_cast<std::size_t>(arcs));
  for (ArcId i = 0; i < arcs; ++i) {
    const VertexId u = pick_tail(rng);
    VertexId v = pick_other(rng);
    if (v >= u) ++v;
    const std::uint64_t slot = pick_slot(rng);
    // Row s holds tau - s + 1 slots; find it by binary search on the
    // cumulative count s*tau - s*(s-1)/2.
    Time lo = 1, hi = tau;
    while (lo < hi) {
      const Time mid = lo + (hi - lo) / 2;
      const std::uint64_t before = static_cast<std::uint64_t>(mid) *
                                       static_cast<std::uint64_t>(tau) -
                                   static_cast<std::uint64_t>(mid) *
                                       static_cast<std::uint64_t>(mid - 1) / 2;
      if (slot < before) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const Time s = lo;
    const std::uint64_t before = static_cast<std::uint64_t>(s - 1) *
                                     static_cast<std::uint64_t>(tau) -
                                 static_cast<std::uint64_t>(s - 1) *
                                     static_cast<std::uint64_t>(s - 2) / 2;
    const Time t = s + static_cast<Time>(slot - before);
    arc_list.push_back({u, v, s, t});
  }

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(vertices));
  for (VertexId v = 1; v <= vertices; ++v) labels.push_back(std::to_string(v));
  return TemporalGraph(std::move(labels), std::move(arc_list), tau);
}

}  // namespace tgb
