#pragma once

#include <cstddef>
#include <vector>

#include "chordtim/analysis.hpp"
#include "chordtim/linalg.hpp"
#include "chordtim/rational.hpp"
#include "chordtim/topology.hpp"

namespace chordtim {

/// sum of rates over `members` <= bound
struct CliqueInequality {
  Clique members;
  Rational bound{1};
};

enum class CliqueFamily {
  maximal,  // one inequality per maximal clique
  all,      // every clique; redundant rows, for diagnostics
};

/// Clique-inequality polytope over the rates of `messages` (nonnegativity
/// implicit). It is the capacity region only when `chordal` is set;
/// otherwise it bounds what orthogonal access can deliver.
struct RegionPolytope {
  MessageSet messages;
  std::vector<CliqueInequality> inequalities;
  ConflictGraph conflicts;
  bool chordal = false;
};

struct PolytopeVertex {
  RationalVector coordinates;  // indexed like RegionPolytope::messages

  friend bool operator==(const PolytopeVertex&, const PolytopeVertex&) = default;
  friend auto operator<=>(const PolytopeVertex& a, const PolytopeVertex& b) {
    return a.coordinates <=> b.coordinates;
  }
};

inline constexpr std::size_t kDefaultVertexLimit = 12;

RegionPolytope build_region(const TopologyGraph& g, const MessageSet& ms,
                            CliqueFamily family = CliqueFamily::maximal);

/// Positional rate vector for `rp`. Throws ValidationError when `r` names a
/// message outside the region; absent messages read as zero.
RationalVector rate_vector(const RegionPolytope& rp, const RateTuple& r);
RateTuple rate_tuple(const RegionPolytope& rp, const RationalVector& x);

bool contains(const RegionPolytope& rp, const RateTuple& r);
bool contains(const RegionPolytope& rp, const RationalVector& x);

/// Number of inequalities (clique rows plus nonnegativity) tight at `x`.
std::size_t tight_count(const RegionPolytope& rp, const RationalVector& x);

/// Exact vertex set: for every support, solve each nonsingular selection of
/// tight clique rows and keep the positive, feasible solutions. Sorted,
/// deduplicated. Throws SizeLimitExceeded above `limit` messages.
std::vector<PolytopeVertex> enumerate_vertices(const RegionPolytope& rp, std::size_t limit = kDefaultVertexLimit);

bool is_integral(const PolytopeVertex& v);

/// Positions of nonzero coordinates.
std::vector<std::size_t> support(const PolytopeVertex& v);

/// All vertices are 0/1 and each support is independent in the conflict graph.
bool integral_vertices_check(const RegionPolytope& rp, std::size_t limit = kDefaultVertexLimit);

/// 1 / chromatic number of the conflict graph. Chordal topologies only.
Rational symmetric_capacity(const TopologyGraph& g, const MessageSet& ms);
/// Independence number of the conflict graph. Chordal topologies only.
std::size_t sum_capacity(const TopologyGraph& g, const MessageSet& ms);

}  // namespace chordtim
