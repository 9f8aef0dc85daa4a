#include "chordtim/demand.hpp"

#include <algorithm>
#include <deque>

#include "chordtim/errors.hpp"

namespace chordtim {

DemandGraph::DemandGraph(const TopologyGraph& g, const MessageSet& ms) : messages_(ms) {
  validate_messages(g, ms);
  for (const Message& m : ms) destinations_.push_back(m.destination);
  std::sort(destinations_.begin(), destinations_.end());
  destinations_.erase(std::unique(destinations_.begin(), destinations_.end()), destinations_.end());

  out_.resize(ms.size() + destinations_.size());
  for (std::size_t k = 0; k < ms.size(); ++k) out_[k].push_back(*destination_node(ms[k].destination));
  for (std::size_t d = 0; d < destinations_.size(); ++d) {
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (!g.connected(ms[k].source, destinations_[d])) out_[ms.size() + d].push_back(k);
    }
  }
}

std::size_t DemandGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& succ : out_) total += succ.size();
  return total;
}

std::optional<std::size_t> DemandGraph::destination_node(std::size_t destination) const {
  const auto it = std::lower_bound(destinations_.begin(), destinations_.end(), destination);
  if (it == destinations_.end() || *it != destination) return std::nullopt;
  return messages_.size() + static_cast<std::size_t>(it - destinations_.begin());
}

bool DemandGraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& succ = out_.at(from);
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

DemandGraph demand_graph(const TopologyGraph& g, const MessageSet& ms) { return DemandGraph(g, ms); }

bool is_acyclic(const DemandGraph& dg) {
  std::vector<std::size_t> indegree(dg.num_nodes(), 0);
  for (std::size_t v = 0; v < dg.num_nodes(); ++v) {
    for (std::size_t w : dg.successors(v)) ++indegree[w];
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < dg.num_nodes(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    ++removed;
    for (std::size_t w : dg.successors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == dg.num_nodes();
}

std::optional<SumBound> acyclic_sum_bound(const TopologyGraph& g, const MessageSet& ms) {
  if (!is_acyclic(demand_graph(g, ms))) return std::nullopt;
  return SumBound{ms, Rational(1)};
}

CliqueAcyclicityReport verify_clique_demand_acyclicity(const TopologyGraph& g, std::size_t limit) {
  if (g.num_edges() > limit) throw SizeLimitExceeded("clique demand-graph check", g.num_edges(), limit);
  if (!is_chordal(g)) {
    throw PreconditionError("topology is not chordal; cliques need not have acyclic demand graphs");
  }
  const ConflictGraph cg = conflict_graph(g, all_unicast(g));
  CliqueAcyclicityReport report;
  for (const Clique& clique : maximal_cliques(cg)) {
    ++report.checked_cliques;
    MessageSet members = cg.messages.subset(clique);
    if (!is_acyclic(demand_graph(g, members))) {
      report.passed = false;
      report.counterexample = std::move(members);
      break;
    }
  }
  return report;
}

}  // namespace chordtim
