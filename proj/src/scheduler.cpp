#include "chordtim/scheduler.hpp"

#include <algorithm>
#include <map>

#include "chordtim/analysis.hpp"
#include "chordtim/linalg.hpp"

namespace chordtim {

namespace {

struct CoverProblem {
  ConflictGraph cg;
  RationalVector rates;
  std::vector<Clique> groups;  // maximal independent sets
};

CoverProblem make_cover_problem(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r,
                                std::size_t limit) {
  if (ms.size() > limit) throw SizeLimitExceeded("schedule synthesis", ms.size(), limit);
  CoverProblem p{conflict_graph(g, ms), RationalVector(ms.size()), {}};
  for (const auto& [m, rate] : r) {
    const auto k = ms.index_of(m);
    if (!k) throw ValidationError("rate given for " + to_string(m) + ", which is not in the message set");
    if (rate.sign() < 0) throw ValidationError("negative rate for " + to_string(m));
    p.rates[*k] = rate;
  }
  p.groups = maximal_independent_sets(p.cg);
  return p;
}

// Dual of the covering LP: max r.y  s.t.  sum_{m in group} y_m <= 1 per group.
// Its optimum is the minimum cover time; the row multipliers are the group weights.
LpSolution solve_cover(const CoverProblem& p) {
  RationalMatrix a(p.groups.size(), RationalVector(p.rates.size()));
  for (std::size_t k = 0; k < p.groups.size(); ++k) {
    for (std::size_t m : p.groups[k]) a[k][m] = Rational(1);
  }
  LpSolution sol = maximize(a, RationalVector(p.groups.size(), Rational(1)), p.rates);
  if (sol.status != LpSolution::Status::optimal) {
    throw std::logic_error("covering LP dual is unbounded; some message lies in no independent set");
  }
  return sol;
}

struct WorkSlot {
  std::vector<std::size_t> group;
  Rational weight;
};

}  // namespace

Rational min_cover_time(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r, std::size_t limit) {
  const CoverProblem p = make_cover_problem(g, ms, r, limit);
  if (ms.empty()) return Rational(0);
  return solve_cover(p).objective;
}

Schedule schedule(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r, std::size_t limit) {
  const CoverProblem p = make_cover_problem(g, ms, r, limit);
  if (ms.empty()) return {};
  const LpSolution sol = solve_cover(p);
  if (sol.objective > Rational(1)) {
    throw InfeasibleSchedule("rates need " + sol.objective.to_string() + " units of time under orthogonal access",
                             sol.objective, is_chordal(g));
  }

  std::vector<WorkSlot> slots;
  for (std::size_t k = 0; k < p.groups.size(); ++k) {
    if (sol.dual[k].sign() > 0) slots.push_back({p.groups[k], sol.dual[k]});
  }

  // Strip over-delivery: splitting a slot and dropping one message from
  // part of it keeps every group independent.
  for (std::size_t m = 0; m < p.rates.size(); ++m) {
    Rational excess = -p.rates[m];
    for (const auto& s : slots) {
      if (std::binary_search(s.group.begin(), s.group.end(), m)) excess += s.weight;
    }
    for (std::size_t i = 0; i < slots.size() && excess.sign() > 0; ++i) {
      auto& group = slots[i].group;
      const auto it = std::lower_bound(group.begin(), group.end(), m);
      if (it == group.end() || *it != m) continue;
      if (slots[i].weight <= excess) {
        excess -= slots[i].weight;
        group.erase(it);
      } else {
        WorkSlot reduced{group, excess};
        reduced.group.erase(reduced.group.begin() + (it - group.begin()));
        slots[i].weight -= excess;
        excess = Rational(0);
        slots.push_back(std::move(reduced));
      }
    }
  }

  std::map<std::vector<std::size_t>, Rational> merged;
  for (auto& s : slots) {
    if (!s.group.empty()) merged[s.group] += s.weight;
  }
  Schedule out;
  for (const auto& [group, weight] : merged) {
    ScheduleSlot slot;
    for (std::size_t k : group) slot.messages.push_back(ms[k]);
    slot.weight = weight;
    out.total_weight += weight;
    out.slots.push_back(std::move(slot));
  }
  return out;
}

RateTuple delivered_rates(const Schedule& s) {
  RateTuple out;
  for (const auto& slot : s.slots) {
    for (const Message& m : slot.messages) out[m] += slot.weight;
  }
  return out;
}

std::optional<std::string> check_schedule(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r,
                                          const Schedule& s) {
  Rational total;
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    const auto& slot = s.slots[i];
    const std::string where = "slot " + std::to_string(i);
    if (slot.weight.sign() <= 0) return where + ": weight must be positive";
    total += slot.weight;
    for (std::size_t a = 0; a < slot.messages.size(); ++a) {
      const Message& x = slot.messages[a];
      if (!ms.contains(x)) return where + ": " + to_string(x) + " is not in the message set";
      for (std::size_t b = a + 1; b < slot.messages.size(); ++b) {
        const Message& y = slot.messages[b];
        if (x.source == y.source) return where + ": shared source " + std::to_string(x.source);
        if (x.destination == y.destination) return where + ": shared destination " + std::to_string(x.destination);
        if (g.connected(x.source, y.destination) || g.connected(y.source, x.destination)) {
          return where + ": " + to_string(x) + " and " + to_string(y) + " interfere";
        }
      }
    }
  }
  if (total != s.total_weight) return "total_weight " + s.total_weight.to_string() + " != sum of weights " + total.to_string();
  if (total > Rational(1)) return "total_weight " + total.to_string() + " exceeds 1";
  const RateTuple got = delivered_rates(s);
  for (const auto& [m, want] : r) {
    const auto it = got.find(m);
    const Rational have = it == got.end() ? Rational(0) : it->second;
    if (have < want) return to_string(m) + " gets " + have.to_string() + " < requested " + want.to_string();
  }
  return std::nullopt;
}

bool verify_schedule(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r, const Schedule& s) {
  return !check_schedule(g, ms, r, s).has_value();
}

Schedule corner_point_schedule(const TopologyGraph& g, const MessageSet& ms, const PolytopeVertex& v) {
  if (v.coordinates.size() != ms.size()) throw ValidationError("vertex dimension does not match the message set");
  if (!is_integral(v)) throw ValidationError("corner-point schedules need a 0/1 vertex");
  ScheduleSlot slot;
  for (std::size_t k : support(v)) slot.messages.push_back(ms[k]);
  for (std::size_t a = 0; a < slot.messages.size(); ++a) {
    for (std::size_t b = a + 1; b < slot.messages.size(); ++b) {
      if (messages_conflict(g, slot.messages[a], slot.messages[b])) {
        throw ValidationError("vertex support is not an orthogonal group");
      }
    }
  }
  if (slot.messages.empty()) return {};
  slot.weight = Rational(1);
  return Schedule{{std::move(slot)}, Rational(1)};
}

Rational lp_max_sum_rate(const TopologyGraph& g, const MessageSet& ms, std::size_t limit) {
  if (ms.size() > limit) throw SizeLimitExceeded("scheduling LP", ms.size(), limit);
  if (ms.empty()) return Rational(0);
  const ConflictGraph cg = conflict_graph(g, ms);
  const auto groups = maximal_independent_sets(cg);
  const std::size_t d = ms.size();
  const std::size_t k = groups.size();
  // Variables: delivered rate x_m (d of them), then slot weights w_k.
  // x_m - sum_{k contains m} w_k <= 0  and  sum_k w_k <= 1.
  RationalMatrix a(d + 1, RationalVector(d + k));
  RationalVector b(d + 1);
  for (std::size_t m = 0; m < d; ++m) a[m][m] = Rational(1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t m : groups[j]) a[m][d + j] = Rational(-1);
    a[d][d + j] = Rational(1);
  }
  b[d] = Rational(1);
  RationalVector c(d + k);
  for (std::size_t m = 0; m < d; ++m) c[m] = Rational(1);
  const LpSolution sol = maximize(a, b, c);
  if (sol.status != LpSolution::Status::optimal) throw std::logic_error("scheduling LP unbounded");
  return sol.objective;
}

}  // namespace chordtim
