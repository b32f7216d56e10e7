#pragma once

#include <cstddef>
#include <vector>

#include "tgb/distances.hpp"
#include "tgb/temporal_graph.hpp"
#include "tgb/walk.hpp"

namespace tgb {

// Exhaustive enumeration is desk-scale machinery: it caps the number of
// produced walks and throws OracleOverflowError instead of truncating.
struct EnumerationOptions {
  std::size_t max_walks = 1'000'000;
};

// All temporal paths from u to v (vertices pairwise distinct), in depth-first
// arc-id order. u == v yields exactly the trivial path.
std::vector<TemporalWalk> enumerate_temporal_paths(
    const TemporalGraph& graph, VertexId u, VertexId v,
    const EnumerationOptions& options = {});

// All temporal walks from u to v containing no zero-travelling closed
// subwalk. The waiting-time optimum can be attained only by a non-path walk,
// but splicing a zero-travelling closed subwalk out of any walk changes
// neither wait nor travelling time, so this class carries every optimum;
// it also repeats no arc and is finite.
std::vector<TemporalWalk> enumerate_wait_walks(
    const TemporalGraph& graph, VertexId u, VertexId v,
    const EnumerationOptions& options = {});

// Optimum per vertex from exhaustive enumeration (paths, or trails for MW).
// Independent oracle for single_source.
DistanceVector oracle_single_source(const TemporalGraph& graph, VertexId root,
                                    DistanceKind kind,
                                    const EnumerationOptions& options = {});

// Minimum arrival over enumerated walks realizing the optimum.
EadVector oracle_single_source_ead(const TemporalGraph& graph, VertexId root,
                                   DistanceKind kind,
                                   const EnumerationOptions& options = {});

// True iff every prefix of `walk` (trivial one included) realizes
// kind(root, prefix endpoint). The trivial prefix realizes the root value by
// convention for every kind, LD's root value of lifetime+1 included.
// Distances are taken from single_source.
bool is_prefix_optimal(const TemporalGraph& graph, VertexId root,
                       const TemporalWalk& walk, DistanceKind kind);

// Prefix-optimal and additionally every prefix arrives at the earliest
// arrival achievable by a realizing walk.
bool is_ead_prefix_optimal(const TemporalGraph& graph, VertexId root,
                           const TemporalWalk& walk, DistanceKind kind);

// Overloads against precomputed vectors (bulk checks).
bool is_prefix_optimal(const TemporalGraph& graph, const DistanceVector& dist,
                       const TemporalWalk& walk);
bool is_ead_prefix_optimal(const TemporalGraph& graph, const DistanceVector& dist,
                           const EadVector& ead, const TemporalWalk& walk);

}  // namespace tgb
