#pragma once

#include <string>

#include "chordtim/topology.hpp"

namespace chordtim {

/// Throws ValidationError unless both orders are permutations of the
/// topology's sources and destinations.
void validate_layout(const TopologyGraph& g, const LineLayout& layout);

/// Every source reaches a contiguous run of destinations in line order.
bool check_source_convexity(const TopologyGraph& g, const LineLayout& layout);

/// Every destination hears a contiguous run of sources in line order.
bool check_destination_convexity(const TopologyGraph& g, const LineLayout& layout);

/// Layout with the two orders exchanged, to pair with TopologyGraph::transposed().
LineLayout swapped(const LineLayout& layout);

struct ConvexityReport {
  enum class Status { pass, fail, not_applicable };
  Status status = Status::not_applicable;
  bool source_convex = false;
  bool destination_convex = false;
  bool chordal = false;
};

std::string to_string(ConvexityReport::Status s);

/// If the layout is source- or destination-convex, the topology must be
/// chordal (`fail` otherwise). Neither property: `not_applicable`.
ConvexityReport convexity_implies_chordal_check(const TopologyGraph& g, const LineLayout& layout);

}  // namespace chordtim
