#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "chordtim/analysis.hpp"
#include "chordtim/rational.hpp"
#include "chordtim/topology.hpp"

namespace chordtim {

/// Which known non-orthogonal scheme the claimed tuple comes from. The
/// tuples are quoted facts; nothing here re-derives their achievability.
enum class ClaimSource {
  multicast,  // odd n: interference-channel messages, 1/2 each
  alignment,  // even n: all-unicast, 1/3 each
};

std::string to_string(ClaimSource s);

/// Evidence that orthogonal access falls short on a non-chordal topology.
struct SuboptimalityCertificate {
  ChordlessCycleWitness cycle;
  MessageSet messages;  // original indices, restricted to the cycle's nodes
  RateTuple claimed_tuple;
  ClaimSource claimed_source = ClaimSource::multicast;
  Rational claimed_sum;
  Rational orthogonal_max_sum;
  Rational gap;
  /// Even n only: sum-DoF (n+1)/2 reported for time-varying channels; recorded, not verified.
  std::optional<Rational> coherence_claimed_sum;
  /// Whether the claimed tuple satisfies the clique inequalities of `messages`.
  bool claimed_in_clique_region = false;

  [[nodiscard]] std::size_t n() const { return cycle.half_length(); }
};

/// Independence number of the conflict graph of `ms`, cross-checked against
/// the scheduling LP's maximum sum (std::logic_error on disagreement).
Rational orthogonal_max_sum(const TopologyGraph& g, const MessageSet& ms, std::size_t limit = 24);

/// Messages of the interference-channel setting on a cycle: S'_k -> D'_k.
MessageSet cycle_interference_messages(const ChordlessCycleWitness& w);
/// Every message on the 2n cycle edges.
MessageSet cycle_all_unicast(const ChordlessCycleWitness& w);

/// Uses the shortest chordless long cycle. Throws PreconditionError on
/// chordal input and CertificateError when the cycle construction yields
/// gap <= 0 (half-length a multiple of 3 in the even case).
SuboptimalityCertificate certify_suboptimality(const TopologyGraph& g);

}  // namespace chordtim
