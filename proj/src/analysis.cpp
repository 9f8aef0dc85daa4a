#include "chordtim/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "chordtim/errors.hpp"

namespace chordtim {

bool messages_conflict(const TopologyGraph& g, const Message& a, const Message& b) {
  if (a == b) return false;
  return a.source == b.source || a.destination == b.destination || g.connected(a.source, b.destination) ||
         g.connected(b.source, a.destination);
}

ConflictGraph conflict_graph(const TopologyGraph& g, const MessageSet& ms) {
  validate_messages(g, ms);
  ConflictGraph cg{ms, UndirectedGraph(ms.size())};
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      if (messages_conflict(g, ms[a], ms[b])) cg.graph.add_edge(a, b);
    }
  }
  return cg;
}

ConflictGraph square_of_line_graph(const TopologyGraph& g) {
  const auto edges = g.edges();
  UndirectedGraph line(edges.size());
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (edges[a].first == edges[b].first || edges[a].second == edges[b].second) line.add_edge(a, b);
    }
  }
  return ConflictGraph{all_unicast(g), line.square()};
}

UndirectedGraph topology_as_graph(const TopologyGraph& g) {
  const std::size_t m = g.num_sources();
  UndirectedGraph out(m + g.num_destinations());
  for (const auto& [s, d] : g.edges()) out.add_edge(s, m + d);
  return out;
}

namespace {

ChordlessCycleWitness canonical_witness(std::span<const std::size_t> cycle, std::size_t num_sources) {
  const std::size_t n = cycle.size() / 2;
  ChordlessCycleWitness forward;
  ChordlessCycleWitness backward;
  for (std::size_t k = 0; k < n; ++k) {
    forward.sources.push_back(cycle[2 * k]);
    forward.destinations.push_back(cycle[2 * k + 1] - num_sources);
    backward.sources.push_back(cycle[(cycle.size() - 2 * k) % cycle.size()]);
    backward.destinations.push_back(cycle[cycle.size() - 1 - 2 * k] - num_sources);
  }
  const auto key = [](const ChordlessCycleWitness& w) { return std::tie(w.sources, w.destinations); };
  return key(backward) < key(forward) ? backward : forward;
}

}  // namespace

std::optional<ChordlessCycleWitness> find_chordless_long_cycle(const TopologyGraph& g) {
  const UndirectedGraph tg = topology_as_graph(g);
  const std::size_t max_half = std::min(g.num_sources(), g.num_destinations());
  for (std::size_t half = 3; half <= max_half; ++half) {
    std::optional<ChordlessCycleWitness> best;
    for_each_induced_cycle(tg, 2 * half, 2 * half, [&](std::span<const std::size_t> cycle) {
      auto w = canonical_witness(cycle, g.num_sources());
      if (!best || std::tie(w.sources, w.destinations) < std::tie(best->sources, best->destinations)) {
        best = std::move(w);
      }
      return false;
    });
    if (best) {
      if (!is_valid_witness(g, *best)) throw std::logic_error("chordless cycle search produced an invalid witness");
      return best;
    }
  }
  return std::nullopt;
}

bool is_valid_witness(const TopologyGraph& g, const ChordlessCycleWitness& w) {
  const std::size_t n = w.sources.size();
  if (n < 3 || w.destinations.size() != n) return false;
  auto s = w.sources;
  auto d = w.destinations;
  std::sort(s.begin(), s.end());
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) return false;
  if (s.back() >= g.num_sources() || d.back() >= g.num_destinations()) return false;
  // S'_a hears D'_b exactly when b == a or b == a - 1 (mod n).
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool expected = b == a || b == (a + n - 1) % n;
      if (g.connected(w.sources[a], w.destinations[b]) != expected) return false;
    }
  }
  return true;
}

bool is_chordal(const TopologyGraph& g) {
  const UndirectedGraph tg = topology_as_graph(g);
  const bool found = for_each_induced_cycle(tg, 6, tg.size(), [](std::span<const std::size_t>) { return true; });
  return !found;
}

std::vector<Clique> maximal_cliques(const ConflictGraph& cg) { return enumerate_maximal_cliques(cg.graph); }

namespace {

void grow_cliques(const UndirectedGraph& g, Clique& current, const VertexSet& candidates, std::vector<Clique>& out) {
  for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
    current.push_back(v);
    out.push_back(current);
    VertexSet next = candidates & g.neighbors(v);
    // Only extend with larger indices so each clique is produced once.
    for (auto u = next.find_first(); u != VertexSet::npos && u <= v; u = next.find_next(u)) next.reset(u);
    grow_cliques(g, current, next, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Clique> all_cliques(const ConflictGraph& cg, std::size_t limit) {
  if (cg.size() > limit) throw SizeLimitExceeded("all-clique enumeration", cg.size(), limit);
  std::vector<Clique> out;
  VertexSet all(cg.size());
  all.set();
  Clique current;
  grow_cliques(cg.graph, current, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> maximal_independent_sets(const ConflictGraph& cg) {
  return enumerate_maximal_cliques(cg.graph.complement());
}

std::vector<std::size_t> maximum_independent_set(const ConflictGraph& cg) {
  return maximum_clique(cg.graph.complement());
}

std::size_t independence_number(const ConflictGraph& cg) { return maximum_independent_set(cg).size(); }

std::size_t clique_number(const ConflictGraph& cg) { return maximum_clique(cg.graph).size(); }

std::size_t chromatic_number(const ConflictGraph& cg) { return exact_chromatic_number(cg.graph); }

std::optional<std::vector<std::size_t>> find_odd_hole(const UndirectedGraph& g) {
  std::optional<std::vector<std::size_t>> hole;
  for_each_induced_cycle(g, 5, g.size(), [&](std::span<const std::size_t> cycle) {
    if (cycle.size() % 2 == 0) return false;
    hole.emplace(cycle.begin(), cycle.end());
    return true;
  });
  return hole;
}

std::optional<std::vector<std::size_t>> find_odd_antihole(const UndirectedGraph& g) {
  return find_odd_hole(g.complement());
}

bool is_perfect(const ConflictGraph& cg, std::size_t limit) {
  if (cg.size() > limit) throw SizeLimitExceeded("perfectness check", cg.size(), limit);
  return !find_odd_hole(cg.graph) && !find_odd_antihole(cg.graph);
}

}  // namespace chordtim
