#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace chordtim {

using VertexSet = boost::dynamic_bitset<>;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

  [[nodiscard]] std::size_t size() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t num_edges() const;

  void add_edge(std::size_t u, std::size_t v);
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  [[nodiscard]] const VertexSet& neighbors(std::size_t v) const { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

  [[nodiscard]] UndirectedGraph complement() const;
  /// Graph on the same vertices, adjacent when distance is 1 or 2.
  [[nodiscard]] UndirectedGraph square() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
  std::vector<VertexSet> adjacency_;
};

/// Visits every induced (chordless) cycle whose length lies in
/// [min_length, max_length], once each. The vertex list starts at the
/// cycle's smallest vertex. Returning true from the visitor stops the
/// search; the function then returns true.
bool for_each_induced_cycle(const UndirectedGraph& g, std::size_t min_length, std::size_t max_length,
                            const std::function<bool(std::span<const std::size_t>)>& visit);

/// Inclusion-maximal cliques by Bron-Kerbosch with Tomita pivoting.
/// Each clique is sorted ascending; the list is sorted lexicographically.
std::vector<std::vector<std::size_t>> enumerate_maximal_cliques(const UndirectedGraph& g);

/// A maximum clique (lexicographically first among those found by the
/// branch-and-bound order), sorted ascending.
std::vector<std::size_t> maximum_clique(const UndirectedGraph& g);

/// Exact chromatic number by backtracking between a clique lower bound and
/// a greedy upper bound. Zero for the empty graph.
std::size_t exact_chromatic_number(const UndirectedGraph& g);

std::vector<std::size_t> to_indices(const VertexSet& s);

}  // namespace chordtim
