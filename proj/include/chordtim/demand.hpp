#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chordtim/analysis.hpp"
#include "chordtim/rational.hpp"
#include "chordtim/topology.hpp"

namespace chordtim {

/// Directed bipartite graph between messages and destinations.
///
/// Node k < messages.size() is message k; node messages.size() + d is
/// destinations[d]. Every message points at its own destination, and a
/// destination points at every message whose source it does not hear.
/// Only destinations that some message wants are present.
class DemandGraph {
public:
  DemandGraph(const TopologyGraph& g, const MessageSet& ms);

  [[nodiscard]] const MessageSet& messages() const { return messages_; }
  [[nodiscard]] const std::vector<std::size_t>& destinations() const { return destinations_; }
  [[nodiscard]] std::size_t num_nodes() const { return out_.size(); }
  [[nodiscard]] std::size_t num_edges() const;
  [[nodiscard]] const std::vector<std::size_t>& successors(std::size_t node) const { return out_[node]; }

  [[nodiscard]] std::size_t message_node(std::size_t k) const { return k; }
  /// Node of destination index `destination`, if present.
  [[nodiscard]] std::optional<std::size_t> destination_node(std::size_t destination) const;
  [[nodiscard]] bool has_edge(std::size_t from, std::size_t to) const;

private:
  MessageSet messages_;
  std::vector<std::size_t> destinations_;
  std::vector<std::vector<std::size_t>> out_;
};

DemandGraph demand_graph(const TopologyGraph& g, const MessageSet& ms);

/// Kahn topological sort.
bool is_acyclic(const DemandGraph& dg);

/// "Sum of these rates <= 1", available when the message set's demand graph is acyclic.
struct SumBound {
  MessageSet messages;
  Rational bound{1};
};

/// Diagnostic outer bound for a single message set; empty if its demand graph has a cycle.
std::optional<SumBound> acyclic_sum_bound(const TopologyGraph& g, const MessageSet& ms);

struct CliqueAcyclicityReport {
  bool passed = true;
  std::size_t checked_cliques = 0;
  std::optional<MessageSet> counterexample;
};

/// Checks that every maximal clique of the all-unicast conflict graph has an
/// acyclic demand graph. Throws PreconditionError for non-chordal input and
/// SizeLimitExceeded when the message count passes `limit`.
CliqueAcyclicityReport verify_clique_demand_acyclicity(const TopologyGraph& g, std::size_t limit = 64);

}  // namespace chordtim
