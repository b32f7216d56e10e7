#pragma once

#include <iosfwd>
#include <string>

#include "tgb/branching.hpp"
#include "tgb/distances.hpp"
#include "tgb/hardness.hpp"
#include "tgb/temporal_graph.hpp"

namespace tgb {

// Stable JSON: object keys in fixed order so identical inputs serialize
// byte-identically.
//
// Branching schema:
//   {"root": <name>, "kind": "EA|FT|LD|MT|MW|ST", "members": [<name>...],
//    "parents": [{"vertex": <name>,
//                 "arc": {"tail":..,"head":..,"t_start":..,"t_arrive":..},
//                 "dist": <int>, "arrival": <int>}, ...]}
std::string branching_to_json(const TemporalGraph& graph, const Branching& b);

// Reads the schema above; arcs are matched back to the smallest arc id with
// the same (tail, head, t_start, t_arrive) tuple (parallel duplicates are
// interchangeable). Throws std::runtime_error on malformed input.
Branching branching_from_json(const TemporalGraph& graph, const std::string& text);

std::string distances_to_json(const TemporalGraph& graph, const DistanceVector& dist,
                              const EadVector* ead = nullptr);

std::string toss_witness_to_json(const TemporalGraph& graph, const TossWitness& witness);

// DOT export; arcs carry "(s,t)" labels.
void graph_to_dot(std::ostream& out, const TemporalGraph& graph);
// Branching arcs solid, remaining graph arcs dotted; set `toward_root` for
// in-branchings.
void branching_to_dot(std::ostream& out, const TemporalGraph& graph,
                      const Branching& b);

}  // namespace tgb
