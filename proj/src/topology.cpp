#include "chordtim/topology.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "chordtim/errors.hpp"

namespace chordtim {

TopologyGraph::TopologyGraph(std::size_t num_sources, std::size_t num_destinations, std::span<const Edge> edges)
    : num_sources_(num_sources), num_destinations_(num_destinations) {
  if (num_sources == 0 || num_destinations == 0) {
    throw ValidationError("topology needs at least one source and one destination");
  }
  connectivity_.assign(num_sources * num_destinations, 0);
  for (const auto& [s, d] : edges) {
    if (s >= num_sources || d >= num_destinations) {
      throw ValidationError("edge [" + std::to_string(s) + "," + std::to_string(d) + "] out of range");
    }
    auto& cell = connectivity_[s * num_destinations + d];
    if (cell != 0) {
      throw ValidationError("duplicate edge [" + std::to_string(s) + "," + std::to_string(d) + "]");
    }
    cell = 1;
    ++num_edges_;
  }
}

std::vector<TopologyGraph::Edge> TopologyGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t d = 0; d < num_destinations_; ++d) {
    for (std::size_t s = 0; s < num_sources_; ++s) {
      if (connected(s, d)) out.emplace_back(s, d);
    }
  }
  return out;
}

TopologyGraph TopologyGraph::transposed() const {
  std::vector<Edge> flipped;
  flipped.reserve(num_edges_);
  for (const auto& [s, d] : edges()) flipped.emplace_back(d, s);
  return TopologyGraph(num_destinations_, num_sources_, flipped);
}

TopologyGraph TopologyGraph::induced(std::span<const std::size_t> sources,
                                     std::span<const std::size_t> destinations) const {
  std::vector<Edge> sub;
  for (std::size_t a = 0; a < sources.size(); ++a) {
    for (std::size_t b = 0; b < destinations.size(); ++b) {
      if (connected(sources[a], destinations[b])) sub.emplace_back(a, b);
    }
  }
  return TopologyGraph(sources.size(), destinations.size(), sub);
}

std::string to_string(const Message& m) {
  return "W[src=" + std::to_string(m.source) + ",dst=" + std::to_string(m.destination) + "]";
}

MessageSet::MessageSet(std::vector<Message> messages) : messages_(std::move(messages)) {
  std::sort(messages_.begin(), messages_.end());
  const auto dup = std::adjacent_find(messages_.begin(), messages_.end());
  if (dup != messages_.end()) throw ValidationError("duplicate message " + to_string(*dup));
}

std::optional<std::size_t> MessageSet::index_of(const Message& m) const {
  const auto it = std::lower_bound(messages_.begin(), messages_.end(), m);
  if (it == messages_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - messages_.begin());
}

MessageSet MessageSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Message> picked;
  picked.reserve(indices.size());
  for (std::size_t k : indices) picked.push_back(messages_.at(k));
  return MessageSet(std::move(picked));
}

MessageSet MessageSet::without(const Message& m) const {
  std::vector<Message> rest;
  rest.reserve(messages_.size());
  std::copy_if(messages_.begin(), messages_.end(), std::back_inserter(rest),
               [&](const Message& x) { return x != m; });
  return MessageSet(std::move(rest));
}

void validate_messages(const TopologyGraph& g, const MessageSet& ms) {
  for (const Message& m : ms) {
    if (m.source >= g.num_sources() || m.destination >= g.num_destinations()) {
      throw ValidationError("message " + to_string(m) + " out of range");
    }
    if (!g.connected(m.source, m.destination)) {
      throw ValidationError("message " + to_string(m) + " has no channel in the topology");
    }
  }
}

MessageSet all_unicast(const TopologyGraph& g) {
  std::vector<Message> out;
  for (const auto& [s, d] : g.edges()) out.push_back({s, d});
  return MessageSet(std::move(out));
}

TopologyGraph gen_cycle(std::size_t n) {
  if (n < 2) throw ValidationError("cyclic network needs n >= 2");
  std::vector<TopologyGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + n - 1) % n);
    edges.emplace_back(i, i);
  }
  return TopologyGraph(n, n, edges);
}

Convex1dInstance gen_convex1d(std::uint64_t seed, std::size_t num_sources, std::size_t num_destinations) {
  if (num_sources == 0 || num_destinations == 0) {
    throw ValidationError("convex network needs at least one source and one destination");
  }
  std::mt19937_64 rng(seed);
  LineLayout layout;
  layout.source_order.resize(num_sources);
  layout.destination_order.resize(num_destinations);
  std::iota(layout.source_order.begin(), layout.source_order.end(), std::size_t{0});
  std::iota(layout.destination_order.begin(), layout.destination_order.end(), std::size_t{0});
  std::shuffle(layout.source_order.begin(), layout.source_order.end(), rng);
  std::shuffle(layout.destination_order.begin(), layout.destination_order.end(), rng);

  std::vector<TopologyGraph::Edge> edges;
  for (std::size_t s = 0; s < num_sources; ++s) {
    std::uniform_int_distribution<std::size_t> len_dist(1, num_destinations);
    const std::size_t len = len_dist(rng);
    std::uniform_int_distribution<std::size_t> start_dist(0, num_destinations - len);
    const std::size_t start = start_dist(rng);
    for (std::size_t pos = start; pos < start + len; ++pos) {
      edges.emplace_back(s, layout.destination_order[pos]);
    }
  }
  return {TopologyGraph(num_sources, num_destinations, edges), std::move(layout)};
}

}  // namespace chordtim
