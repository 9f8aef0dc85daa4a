#include "chordtim/onedim.hpp"

#include <algorithm>
#include <numeric>

#include "chordtim/analysis.hpp"
#include "chordtim/errors.hpp"

namespace chordtim {

namespace {

void require_permutation(const std::vector<std::size_t>& order, std::size_t n, const char* what) {
  if (order.size() != n) {
    throw ValidationError(std::string(what) + " order lists " + std::to_string(order.size()) + " nodes, expected " +
                          std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw ValidationError(std::string(what) + " order is not a permutation");
    seen[v] = true;
  }
}

// For each row node, the positions (in `order`) of the column nodes it
// touches must form an interval.
template <typename Connected>
bool runs_are_contiguous(std::size_t rows, const std::vector<std::size_t>& order, Connected connected) {
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t first = order.size();
    std::size_t last = 0;
    std::size_t count = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (!connected(r, order[pos])) continue;
      first = std::min(first, pos);
      last = pos;
      ++count;
    }
    if (count > 0 && last - first + 1 != count) return false;
  }
  return true;
}

}  // namespace

void validate_layout(const TopologyGraph& g, const LineLayout& layout) {
  require_permutation(layout.source_order, g.num_sources(), "source");
  require_permutation(layout.destination_order, g.num_destinations(), "destination");
}

bool check_source_convexity(const TopologyGraph& g, const LineLayout& layout) {
  validate_layout(g, layout);
  return runs_are_contiguous(g.num_sources(), layout.destination_order,
                             [&](std::size_t s, std::size_t d) { return g.connected(s, d); });
}

bool check_destination_convexity(const TopologyGraph& g, const LineLayout& layout) {
  validate_layout(g, layout);
  return runs_are_contiguous(g.num_destinations(), layout.source_order,
                             [&](std::size_t d, std::size_t s) { return g.connected(s, d); });
}

LineLayout swapped(const LineLayout& layout) { return {layout.destination_order, layout.source_order}; }

std::string to_string(ConvexityReport::Status s) {
  switch (s) {
    case ConvexityReport::Status::pass:
      return "pass";
    case ConvexityReport::Status::fail:
      return "fail";
    case ConvexityReport::Status::not_applicable:
      break;
  }
  return "not_applicable";
}

ConvexityReport convexity_implies_chordal_check(const TopologyGraph& g, const LineLayout& layout) {
  ConvexityReport report;
  report.source_convex = check_source_convexity(g, layout);
  report.destination_convex = check_destination_convexity(g, layout);
  report.chordal = is_chordal(g);
  if (!report.source_convex && !report.destination_convex) {
    report.status = ConvexityReport::Status::not_applicable;
  } else {
    report.status = report.chordal ? ConvexityReport::Status::pass : ConvexityReport::Status::fail;
  }
  return report;
}

}  // namespace chordtim
