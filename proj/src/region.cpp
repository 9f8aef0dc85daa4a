#include "chordtim/region.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "chordtim/errors.hpp"

namespace chordtim {

RegionPolytope build_region(const TopologyGraph& g, const MessageSet& ms, CliqueFamily family) {
  RegionPolytope rp;
  rp.messages = ms;
  rp.conflicts = conflict_graph(g, ms);
  rp.chordal = is_chordal(g);
  const auto cliques = family == CliqueFamily::maximal ? maximal_cliques(rp.conflicts) : all_cliques(rp.conflicts);
  for (const Clique& c : cliques) rp.inequalities.push_back({c, Rational(1)});
  return rp;
}

RationalVector rate_vector(const RegionPolytope& rp, const RateTuple& r) {
  RationalVector x(rp.messages.size());
  for (const auto& [m, rate] : r) {
    const auto k = rp.messages.index_of(m);
    if (!k) throw ValidationError("rate given for " + to_string(m) + ", which is not in the message set");
    x[*k] = rate;
  }
  return x;
}

RateTuple rate_tuple(const RegionPolytope& rp, const RationalVector& x) {
  RateTuple r;
  for (std::size_t k = 0; k < rp.messages.size(); ++k) r.emplace(rp.messages[k], x.at(k));
  return r;
}

bool contains(const RegionPolytope& rp, const RationalVector& x) {
  if (x.size() != rp.messages.size()) throw ValidationError("rate vector length does not match the region");
  for (const Rational& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const auto& ineq : rp.inequalities) {
    Rational sum;
    for (std::size_t k : ineq.members) sum += x[k];
    if (sum > ineq.bound) return false;
  }
  return true;
}

bool contains(const RegionPolytope& rp, const RateTuple& r) { return contains(rp, rate_vector(rp, r)); }

std::size_t tight_count(const RegionPolytope& rp, const RationalVector& x) {
  std::size_t tight = 0;
  for (const Rational& v : x) tight += v.is_zero() ? 1 : 0;
  for (const auto& ineq : rp.inequalities) {
    Rational sum;
    for (std::size_t k : ineq.members) sum += x[k];
    tight += sum == ineq.bound ? 1 : 0;
  }
  return tight;
}

namespace {

using Mask = std::uint64_t;

// Vertices whose support is exactly `cols`: pick |cols| linearly independent
// restricted clique rows to be tight, solve, keep strictly positive and
// globally feasible points.
class SupportSolver {
public:
  SupportSolver(const RegionPolytope& rp, std::vector<std::size_t> cols, std::vector<Mask> rows,
                std::set<PolytopeVertex>& out)
      : rp_(rp), cols_(std::move(cols)), rows_(std::move(rows)), out_(out) {}

  void run() {
    std::vector<Echelon> basis;
    std::vector<std::size_t> chosen;
    search(0, basis, chosen);
  }

private:
  struct Echelon {
    RationalVector row;
    std::size_t pivot;
  };

  RationalVector dense(Mask row) const {
    RationalVector v(cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if ((row >> cols_[c]) & 1U) v[c] = Rational(1);
    }
    return v;
  }

  void search(std::size_t next, std::vector<Echelon>& basis, std::vector<std::size_t>& chosen) {
    const std::size_t t = cols_.size();
    if (chosen.size() == t) {
      solve(chosen);
      return;
    }
    for (std::size_t r = next; r < rows_.size(); ++r) {
      if (rows_.size() - r < t - chosen.size()) return;
      RationalVector v = dense(rows_[r]);
      for (const auto& b : basis) {
        if (v[b.pivot].is_zero()) continue;
        const Rational f = v[b.pivot];
        for (std::size_t j = 0; j < t; ++j) v[j] -= f * b.row[j];
      }
      std::size_t pivot = t;
      for (std::size_t j = 0; j < t; ++j) {
        if (!v[j].is_zero()) {
          pivot = j;
          break;
        }
      }
      if (pivot == t) continue;  // dependent on rows already chosen
      const Rational p = v[pivot];
      for (auto& e : v) e /= p;
      basis.push_back({std::move(v), pivot});
      chosen.push_back(r);
      search(r + 1, basis, chosen);
      chosen.pop_back();
      basis.pop_back();
    }
  }

  void solve(const std::vector<std::size_t>& chosen) {
    RationalMatrix a;
    a.reserve(chosen.size());
    for (std::size_t r : chosen) a.push_back(dense(rows_[r]));
    auto y = solve_square(std::move(a), RationalVector(chosen.size(), Rational(1)));
    if (!y) return;
    for (const Rational& v : *y) {
      if (v.sign() <= 0) return;
    }
    PolytopeVertex vertex{RationalVector(rp_.messages.size())};
    for (std::size_t c = 0; c < cols_.size(); ++c) vertex.coordinates[cols_[c]] = (*y)[c];
    if (contains(rp_, vertex.coordinates)) out_.insert(std::move(vertex));
  }

  const RegionPolytope& rp_;
  std::vector<std::size_t> cols_;
  std::vector<Mask> rows_;
  std::set<PolytopeVertex>& out_;
};

constexpr std::size_t kMaskBits = 62;

}  // namespace

std::vector<PolytopeVertex> enumerate_vertices(const RegionPolytope& rp, std::size_t limit) {
  const std::size_t d = rp.messages.size();
  if (d > limit) throw SizeLimitExceeded("vertex enumeration", d, limit);
  if (d > kMaskBits) throw SizeLimitExceeded("vertex enumeration", d, kMaskBits);

  std::vector<Mask> clique_masks;
  for (const auto& ineq : rp.inequalities) {
    Mask m = 0;
    for (std::size_t k : ineq.members) m |= Mask{1} << k;
    clique_masks.push_back(m);
  }

  std::set<PolytopeVertex> found;
  found.insert(PolytopeVertex{RationalVector(d)});
  const Mask full = d == 0 ? 0 : (Mask{1} << d) - 1;
  for (Mask support = 1; support <= full && support != 0; ++support) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < d; ++k) {
      if ((support >> k) & 1U) cols.push_back(k);
    }
    std::vector<Mask> rows;
    for (Mask m : clique_masks) {
      if ((m & support) != 0) rows.push_back(m & support);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (rows.size() < cols.size()) continue;
    SupportSolver(rp, std::move(cols), std::move(rows), found).run();
  }
  return {found.begin(), found.end()};
}

bool is_integral(const PolytopeVertex& v) {
  return std::all_of(v.coordinates.begin(), v.coordinates.end(),
                     [](const Rational& x) { return x.is_zero() || x == Rational(1); });
}

std::vector<std::size_t> support(const PolytopeVertex& v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.coordinates.size(); ++k) {
    if (!v.coordinates[k].is_zero()) out.push_back(k);
  }
  return out;
}

bool integral_vertices_check(const RegionPolytope& rp, std::size_t limit) {
  for (const PolytopeVertex& v : enumerate_vertices(rp, limit)) {
    if (!is_integral(v)) return false;
    const auto s = support(v);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (rp.conflicts.graph.adjacent(s[a], s[b])) return false;
      }
    }
  }
  return true;
}

namespace {

void require_chordal(const TopologyGraph& g, const char* what) {
  if (!is_chordal(g)) {
    throw PreconditionError(std::string(what) +
                            " is only a capacity for chordal topologies; this one has a chordless long cycle");
  }
}

}  // namespace

Rational symmetric_capacity(const TopologyGraph& g, const MessageSet& ms) {
  require_chordal(g, "symmetric capacity");
  const ConflictGraph cg = conflict_graph(g, ms);
  const std::size_t chi = chromatic_number(cg);
  if (chi == 0) throw ValidationError("symmetric capacity of an empty message set is undefined");
  return Rational(1, static_cast<std::int64_t>(chi));
}

std::size_t sum_capacity(const TopologyGraph& g, const MessageSet& ms) {
  require_chordal(g, "sum capacity");
  return independence_number(conflict_graph(g, ms));
}

}  // namespace chordtim
