#pragma once

#include <cstdint>

#include "tgb/temporal_graph.hpp"

namespace tgb {

// Reproducible random instance: `arcs` arcs sampled uniformly among the
// legal tuples (u, v, s, t) with u != v and 1 <= s <= t <= tau. Vertices are
// labelled "1".."n". Same seed, same graph.
TemporalGraph random_temporal_graph(VertexId vertices, ArcId arcs, Time tau,
                                    std::uint64_t seed);

}  // namespace tgb
