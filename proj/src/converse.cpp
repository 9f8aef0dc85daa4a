#include "chordtim/converse.hpp"

#include <stdexcept>

#include "chordtim/errors.hpp"
#include "chordtim/region.hpp"
#include "chordtim/scheduler.hpp"

namespace chordtim {

std::string to_string(ClaimSource s) { return s == ClaimSource::multicast ? "multicast" : "alignment"; }

Rational orthogonal_max_sum(const TopologyGraph& g, const MessageSet& ms, std::size_t limit) {
  if (ms.size() > limit) throw SizeLimitExceeded("orthogonal max sum", ms.size(), limit);
  const Rational alpha(static_cast<std::int64_t>(independence_number(conflict_graph(g, ms))));
  const Rational lp = lp_max_sum_rate(g, ms, limit);
  if (alpha != lp) {
    throw std::logic_error("independence number " + alpha.to_string() + " disagrees with scheduling LP " +
                           lp.to_string());
  }
  return alpha;
}

MessageSet cycle_interference_messages(const ChordlessCycleWitness& w) {
  std::vector<Message> out;
  for (std::size_t k = 0; k < w.half_length(); ++k) out.push_back({w.sources[k], w.destinations[k]});
  return MessageSet(std::move(out));
}

MessageSet cycle_all_unicast(const ChordlessCycleWitness& w) {
  const std::size_t n = w.half_length();
  std::vector<Message> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back({w.sources[k], w.destinations[k]});
    out.push_back({w.sources[k], w.destinations[(k + n - 1) % n]});
  }
  return MessageSet(std::move(out));
}

SuboptimalityCertificate certify_suboptimality(const TopologyGraph& g) {
  auto witness = find_chordless_long_cycle(g);
  if (!witness) {
    throw PreconditionError("topology is chordal; orthogonal access already achieves the capacity region");
  }
  SuboptimalityCertificate cert;
  cert.cycle = std::move(*witness);
  const std::size_t n = cert.n();
  const bool odd = n % 2 == 1;

  Rational per_message;
  if (odd) {
    cert.messages = cycle_interference_messages(cert.cycle);
    cert.claimed_source = ClaimSource::multicast;
    per_message = Rational(1, 2);
  } else {
    cert.messages = cycle_all_unicast(cert.cycle);
    cert.claimed_source = ClaimSource::alignment;
    per_message = Rational(1, 3);
    cert.coherence_claimed_sum = Rational(static_cast<std::int64_t>(n + 1), 2);
  }
  for (const Message& m : cert.messages) {
    cert.claimed_tuple.emplace(m, per_message);
    cert.claimed_sum += per_message;
  }

  cert.orthogonal_max_sum = orthogonal_max_sum(g, cert.messages, 2 * n);
  cert.gap = cert.claimed_sum - cert.orthogonal_max_sum;
  if (cert.gap.sign() <= 0) {
    throw CertificateError("claimed sum " + cert.claimed_sum.to_string() + " does not exceed orthogonal max sum " +
                           cert.orthogonal_max_sum.to_string() + " on the " + std::to_string(2 * n) + "-cycle");
  }

  cert.claimed_in_clique_region = contains(build_region(g, cert.messages), cert.claimed_tuple);
  return cert;
}

}  // namespace chordtim
