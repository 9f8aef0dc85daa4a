#include "chordtim/graph.hpp"

#include <algorithm>
#include <numeric>

namespace chordtim {

std::size_t UndirectedGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

UndirectedGraph UndirectedGraph::complement() const {
  UndirectedGraph out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    out.adjacency_[v] = ~adjacency_[v];
    out.adjacency_[v].reset(v);
  }
  return out;
}

UndirectedGraph UndirectedGraph::square() const {
  UndirectedGraph out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    VertexSet reach = adjacency_[v];
    for (auto u = adjacency_[v].find_first(); u != VertexSet::npos; u = adjacency_[v].find_next(u)) {
      reach |= adjacency_[u];
    }
    reach.reset(v);
    out.adjacency_[v] = reach;
  }
  return out;
}

std::vector<std::size_t> to_indices(const VertexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
  return out;
}

namespace {

class InducedCycleSearch {
public:
  InducedCycleSearch(const UndirectedGraph& g, std::size_t min_length, std::size_t max_length,
                     const std::function<bool(std::span<const std::size_t>)>& visit)
      : g_(g), min_length_(min_length), max_length_(max_length), visit_(visit), in_path_(g.size()) {}

  bool run() {
    for (std::size_t s = 0; s < g_.size(); ++s) {
      path_.assign(1, s);
      in_path_.reset();
      in_path_.set(s);
      VertexSet blocked(g_.size());
      if (extend(blocked)) return true;
    }
    return false;
  }

private:
  // `blocked` = neighbours of the interior vertices path_[1..k-1].
  bool extend(const VertexSet& blocked) {
    const std::size_t start = path_.front();
    const std::size_t last = path_.back();
    const std::size_t k = path_.size() - 1;
    VertexSet candidates = g_.neighbors(last) - blocked - in_path_;
    for (auto w = candidates.find_first(); w != VertexSet::npos; w = candidates.find_next(w)) {
      if (w <= start) continue;
      const bool closes = k >= 1 && g_.adjacent(w, start);
      if (closes) {
        const std::size_t length = path_.size() + 1;
        if (length >= min_length_ && length <= max_length_ && path_[1] < w) {
          path_.push_back(w);
          const bool stop = visit_(path_);
          path_.pop_back();
          if (stop) return true;
        }
        continue;
      }
      if (path_.size() + 2 > max_length_) continue;
      VertexSet next_blocked = blocked;
      if (k >= 1) next_blocked |= g_.neighbors(last);
      path_.push_back(w);
      in_path_.set(w);
      const bool stop = extend(next_blocked);
      in_path_.reset(w);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const UndirectedGraph& g_;
  std::size_t min_length_;
  std::size_t max_length_;
  const std::function<bool(std::span<const std::size_t>)>& visit_;
  std::vector<std::size_t> path_;
  VertexSet in_path_;
};

void bron_kerbosch(const UndirectedGraph& g, std::vector<std::size_t>& clique, VertexSet candidates,
                   VertexSet excluded, std::vector<std::vector<std::size_t>>& out) {
  if (candidates.none()) {
    if (excluded.none()) {
      auto sorted = clique;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
    }
    return;
  }
  // Pivot: vertex of P u X with most neighbours in P, smallest index on ties.
  const VertexSet pool = candidates | excluded;
  std::size_t pivot = VertexSet::npos;
  std::size_t best = 0;
  for (auto u = pool.find_first(); u != VertexSet::npos; u = pool.find_next(u)) {
    const std::size_t c = (candidates & g.neighbors(u)).count();
    if (pivot == VertexSet::npos || c > best) {
      best = c;
      pivot = u;
    }
  }
  const VertexSet branch = candidates - g.neighbors(pivot);
  for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
    clique.push_back(v);
    bron_kerbosch(g, clique, candidates & g.neighbors(v), excluded & g.neighbors(v), out);
    clique.pop_back();
    candidates.reset(v);
    excluded.set(v);
  }
}

class MaxCliqueSearch {
public:
  explicit MaxCliqueSearch(const UndirectedGraph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    VertexSet all(g_.size());
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  // Greedy colouring of `p` in index order; returns vertices by ascending colour.
  void colour_sort(const VertexSet& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    VertexSet uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      VertexSet available = uncoloured;
      while (available.any()) {
        const std::size_t v = available.find_first();
        available.reset(v);
        available -= g_.neighbors(v);
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, VertexSet p) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    colour_sort(p, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + bound[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      const VertexSet next = p & g_.neighbors(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  const UndirectedGraph& g_;
  std::vector<std::size_t> best_;
};

class Colouring {
public:
  explicit Colouring(const UndirectedGraph& g) : g_(g), colour_(g.size(), kNone) {}

  bool colourable(std::size_t k, std::span<const std::size_t> seed_clique) {
    std::fill(colour_.begin(), colour_.end(), kNone);
    if (seed_clique.size() > k) return false;
    for (std::size_t c = 0; c < seed_clique.size(); ++c) colour_[seed_clique[c]] = c;
    return assign(k, seed_clique.size());
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // DSATUR branching: pick the uncoloured vertex with the most distinct
  // neighbour colours, then the highest degree, then the smallest index.
  bool assign(std::size_t k, std::size_t used) {
    std::size_t pick = kNone;
    std::size_t pick_sat = 0;
    std::size_t pick_deg = 0;
    std::vector<bool> seen(k);
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (colour_[v] != kNone) continue;
      std::fill(seen.begin(), seen.end(), false);
      std::size_t sat = 0;
      const auto& nb = g_.neighbors(v);
      for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
        if (colour_[u] != kNone && !seen[colour_[u]]) {
          seen[colour_[u]] = true;
          ++sat;
        }
      }
      const std::size_t deg = g_.degree(v);
      if (pick == kNone || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick == kNone) return true;
    const std::size_t limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      const auto& nb = g_.neighbors(pick);
      for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
        if (colour_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour_[pick] = c;
      if (assign(k, std::max(used, c + 1))) return true;
      colour_[pick] = kNone;
    }
    return false;
  }

  const UndirectedGraph& g_;
  std::vector<std::size_t> colour_;
};

std::size_t greedy_colour_count(const UndirectedGraph& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> colour(g.size(), 0);
  std::vector<bool> assigned(g.size(), false);
  std::size_t count = 0;
  for (std::size_t v : order) {
    std::vector<bool> used(count + 1, false);
    const auto& nb = g.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      if (assigned[u]) used[colour[u]] = true;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    colour[v] = c;
    assigned[v] = true;
    count = std::max(count, c + 1);
  }
  return count;
}

}  // namespace

bool for_each_induced_cycle(const UndirectedGraph& g, std::size_t min_length, std::size_t max_length,
                            const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (max_length < 3 || min_length > max_length) return false;
  return InducedCycleSearch(g, std::max<std::size_t>(min_length, 3), max_length, visit).run();
}

std::vector<std::vector<std::size_t>> enumerate_maximal_cliques(const UndirectedGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  if (g.size() == 0) return out;
  VertexSet all(g.size());
  all.set();
  std::vector<std::size_t> clique;
  bron_kerbosch(g, clique, all, VertexSet(g.size()), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> maximum_clique(const UndirectedGraph& g) {
  if (g.size() == 0) return {};
  return MaxCliqueSearch(g).run();
}

std::size_t exact_chromatic_number(const UndirectedGraph& g) {
  if (g.size() == 0) return 0;
  const auto clique = maximum_clique(g);
  const std::size_t upper = greedy_colour_count(g);
  Colouring colouring(g);
  for (std::size_t k = clique.size(); k < upper; ++k) {
    if (colouring.colourable(k, clique)) return k;
  }
  return upper;
}

}  // namespace chordtim
