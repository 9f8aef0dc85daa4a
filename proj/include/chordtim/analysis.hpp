#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chordtim/graph.hpp"
#include "chordtim/topology.hpp"

namespace chordtim {

/// Message conflict graph: vertex k is messages[k].
struct ConflictGraph {
  MessageSet messages;
  UndirectedGraph graph;

  [[nodiscard]] std::size_t size() const { return messages.size(); }
  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;
};

/// Positions into ConflictGraph::messages, ascending.
using Clique = std::vector<std::size_t>;

/// Chordless cycle S'_1 D'_1 S'_2 D'_2 ... S'_n D'_n (back to S'_1), so that
/// S'_k hears D'_{k-1} and D'_k (indices mod n).
struct ChordlessCycleWitness {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> destinations;

  [[nodiscard]] std::size_t half_length() const { return sources.size(); }
  [[nodiscard]] std::size_t length() const { return 2 * sources.size(); }
  friend bool operator==(const ChordlessCycleWitness&, const ChordlessCycleWitness&) = default;
};

inline constexpr std::size_t kDefaultPerfectnessLimit = 16;

/// Two messages conflict on a shared source, a shared destination, or when
/// either source reaches the other's destination.
bool messages_conflict(const TopologyGraph& g, const Message& a, const Message& b);

ConflictGraph conflict_graph(const TopologyGraph& g, const MessageSet& ms);

/// Square of the line graph, built structurally (edges adjacent on a shared
/// endpoint, then distance <= 2). Vertices follow all_unicast(g) order.
ConflictGraph square_of_line_graph(const TopologyGraph& g);

/// Topology as a plain graph: sources 0..M-1, destinations M..M+N-1.
UndirectedGraph topology_as_graph(const TopologyGraph& g);

/// Shortest chordless cycle of length >= 6, lexicographically least among
/// the shortest. Empty when the network is chordal.
std::optional<ChordlessCycleWitness> find_chordless_long_cycle(const TopologyGraph& g);

/// Distinct vertices, n >= 3, and the induced subgraph is exactly the 2n-cycle.
bool is_valid_witness(const TopologyGraph& g, const ChordlessCycleWitness& w);

bool is_chordal(const TopologyGraph& g);

std::vector<Clique> maximal_cliques(const ConflictGraph& cg);

/// Every nonempty clique, sorted. Exponential; throws SizeLimitExceeded
/// above `limit` vertices.
std::vector<Clique> all_cliques(const ConflictGraph& cg, std::size_t limit = 20);

/// Inclusion-maximal independent sets, sorted like maximal_cliques.
std::vector<Clique> maximal_independent_sets(const ConflictGraph& cg);

std::vector<std::size_t> maximum_independent_set(const ConflictGraph& cg);
std::size_t independence_number(const ConflictGraph& cg);
std::size_t clique_number(const ConflictGraph& cg);
std::size_t chromatic_number(const ConflictGraph& cg);

/// Odd chordless cycle of length >= 5 in `g`, if any.
std::optional<std::vector<std::size_t>> find_odd_hole(const UndirectedGraph& g);
/// Odd hole of the complement, i.e. an odd antihole of `g`.
std::optional<std::vector<std::size_t>> find_odd_antihole(const UndirectedGraph& g);

/// No odd hole and no odd antihole. Throws SizeLimitExceeded above `limit`.
bool is_perfect(const ConflictGraph& cg, std::size_t limit = kDefaultPerfectnessLimit);

}  // namespace chordtim
