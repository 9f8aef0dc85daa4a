// Brute-force reference implementations used only by tests. Each one works
// straight from a definition (subset enumeration, colouring DP, plain DFS)
// and shares no search code with the library.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chordtim/graph.hpp"
#include "chordtim/rational.hpp"
#include "chordtim/region.hpp"
#include "chordtim/topology.hpp"

namespace chordtim::oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

AdjMatrix adjacency_matrix(const UndirectedGraph& g);

/// Conflict adjacency straight from the definition, messages in the given order.
AdjMatrix conflict_matrix(const TopologyGraph& g, const MessageSet& ms);

/// Subsets of V whose members are pairwise adjacent and no vertex extends them.
std::vector<std::vector<std::size_t>> maximal_cliques(const AdjMatrix& adj);
/// Every nonempty clique, sorted.
std::vector<std::vector<std::size_t>> all_cliques(const AdjMatrix& adj);
std::vector<std::vector<std::size_t>> maximal_independent_sets(const AdjMatrix& adj);

std::size_t independence_number(const AdjMatrix& adj);
std::size_t clique_number(const AdjMatrix& adj);
/// Minimum number of independent sets covering V (subset DP).
std::size_t chromatic_number(const AdjMatrix& adj);

/// Some vertex subset of odd size >= 5 induces a cycle.
bool has_odd_hole(const AdjMatrix& adj);
bool has_odd_antihole(const AdjMatrix& adj);

/// Length of the shortest induced cycle with >= 6 vertices in the topology
/// graph, or 0 if there is none. Enumerates equal-size source/destination
/// subsets and tests whether they induce a single cycle.
std::size_t shortest_chordless_long_cycle(const TopologyGraph& g);
inline bool is_chordal(const TopologyGraph& g) { return shortest_chordless_long_cycle(g) == 0; }

/// Demand graph of `ms` has a directed cycle, found by colouring DFS over
/// edges rebuilt from the definition.
bool demand_has_cycle(const TopologyGraph& g, const MessageSet& ms);

/// Vertices by trying every d-subset of the d + k constraints, Gauss-Jordan
/// on each, keeping feasible solutions. Small d only.
std::vector<RationalVector> polytope_vertices(std::size_t dim, const std::vector<std::vector<std::size_t>>& cliques);

}  // namespace chordtim::oracle
