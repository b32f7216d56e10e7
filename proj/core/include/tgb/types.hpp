#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgb {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using Time = std::int64_t;
using Dist = std::int64_t;

inline constexpr ArcId kNoArc = -1;
inline constexpr VertexId kNoVertex = -1;

// Unreachable sentinel. Legal distance values are bounded by tau * m, so the
// max of the representation is always out of band.
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

// The six single-source optimisation criteria over temporal walks.
enum class DistanceKind : std::uint8_t {
  EarliestArrival,
  FastestTime,
  LatestDeparture,
  MinimumTransfers,
  MinimumWaiting,
  ShortestTravelling,
};

inline constexpr std::array<DistanceKind, 6> kAllDistanceKinds = {
    DistanceKind::EarliestArrival,   DistanceKind::FastestTime,
    DistanceKind::LatestDeparture,   DistanceKind::MinimumTransfers,
    DistanceKind::MinimumWaiting,    DistanceKind::ShortestTravelling,
};

std::string_view to_string(DistanceKind kind);
std::optional<DistanceKind> parse_distance_kind(std::string_view text);

// Thrown when a brute-force search would exceed its configured size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when path enumeration exceeds its configured walk cap.
class OracleOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an arc sequence is not a temporal walk of the graph.
class InvalidWalkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tgb
