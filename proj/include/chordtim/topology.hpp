#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordtim/rational.hpp"

namespace chordtim {

/// Bipartite source/destination connectivity. Entry (i, j) is set iff
/// source i reaches destination j with a non-trivial channel (t_ji = 1).
/// The antidote relation is the complement and is never stored.
class TopologyGraph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;  // (source, destination)

  TopologyGraph() = default;

  /// Validates: M, N > 0, every index in range, no duplicate edges.
  TopologyGraph(std::size_t num_sources, std::size_t num_destinations, std::span<const Edge> edges);

  [[nodiscard]] std::size_t num_sources() const { return num_sources_; }
  [[nodiscard]] std::size_t num_destinations() const { return num_destinations_; }
  [[nodiscard]] std::size_t num_edges() const { return num_edges_; }

  [[nodiscard]] bool connected(std::size_t source, std::size_t destination) const {
    return connectivity_[source * num_destinations_ + destination] != 0;
  }
  [[nodiscard]] bool antidote(std::size_t source, std::size_t destination) const {
    return !connected(source, destination);
  }

  /// Edges in canonical (destination, source) order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Same network with the roles of sources and destinations exchanged.
  [[nodiscard]] TopologyGraph transposed() const;

  /// Sub-network induced by the given sources and destinations, relabeled
  /// 0.. in the order supplied.
  [[nodiscard]] TopologyGraph induced(std::span<const std::size_t> sources,
                                      std::span<const std::size_t> destinations) const;

  friend bool operator==(const TopologyGraph&, const TopologyGraph&) = default;

private:
  std::size_t num_sources_ = 0;
  std::size_t num_destinations_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::uint8_t> connectivity_;  // source-major M x N
};

/// Unicast message W_ji from source i to destination j.
struct Message {
  std::size_t source = 0;
  std::size_t destination = 0;

  friend bool operator==(const Message&, const Message&) = default;
  // Canonical order is by destination first, matching the W_ji subscripts.
  friend std::strong_ordering operator<=>(const Message& a, const Message& b) {
    if (auto c = a.destination <=> b.destination; c != 0) return c;
    return a.source <=> b.source;
  }
};

std::string to_string(const Message& m);

/// Duplicate-free messages in canonical order. Validity against a topology
/// is checked by `validate_messages`.
class MessageSet {
public:
  MessageSet() = default;
  /// Sorts; throws ValidationError on duplicates.
  explicit MessageSet(std::vector<Message> messages);

  [[nodiscard]] std::size_t size() const { return messages_.size(); }
  [[nodiscard]] bool empty() const { return messages_.empty(); }
  [[nodiscard]] const Message& operator[](std::size_t k) const { return messages_[k]; }
  [[nodiscard]] auto begin() const { return messages_.begin(); }
  [[nodiscard]] auto end() const { return messages_.end(); }
  [[nodiscard]] const std::vector<Message>& messages() const { return messages_; }

  [[nodiscard]] std::optional<std::size_t> index_of(const Message& m) const;
  [[nodiscard]] bool contains(const Message& m) const { return index_of(m).has_value(); }

  /// Members at the given positions, as a new set.
  [[nodiscard]] MessageSet subset(std::span<const std::size_t> indices) const;
  [[nodiscard]] MessageSet without(const Message& m) const;

  friend bool operator==(const MessageSet&, const MessageSet&) = default;

private:
  std::vector<Message> messages_;
};

/// Throws ValidationError unless every message sits on an existing channel.
void validate_messages(const TopologyGraph& g, const MessageSet& ms);

/// Rate per message. Missing messages are read as rate zero.
using RateTuple = std::map<Message, Rational>;

/// Relative order of nodes on a line: position k holds the node index.
struct LineLayout {
  std::vector<std::size_t> source_order;
  std::vector<std::size_t> destination_order;

  friend bool operator==(const LineLayout&, const LineLayout&) = default;
};

struct Convex1dInstance {
  TopologyGraph graph;
  LineLayout layout;
};

/// One message per edge, canonical order.
MessageSet all_unicast(const TopologyGraph& g);

/// Cyclic network on n sources and n destinations: source i hears
/// destinations (i - 1 mod n) and i. A single chordless 2n-cycle.
TopologyGraph gen_cycle(std::size_t n);

/// Random one-dimensional network: sources and destinations are shuffled
/// onto a line and each source reaches a contiguous run of destinations.
/// Source convex by construction; deterministic in the seed.
Convex1dInstance gen_convex1d(std::uint64_t seed, std::size_t num_sources, std::size_t num_destinations);

}  // namespace chordtim
