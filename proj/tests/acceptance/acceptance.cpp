// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chordtim/analysis.hpp"
#include "chordtim/converse.hpp"
#include "chordtim/demand.hpp"
#include "chordtim/errors.hpp"
#include "chordtim/onedim.hpp"
#include "chordtim/region.hpp"
#include "chordtim/scheduler.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chordtim;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string str(const Rational& r) { return r.to_string(); }

// Random topology with between max_edges/2 and max_edges edges, cycling
// through dense random, tree and one-dimensional convex families.
TopologyGraph random_instance(std::mt19937_64& rng, std::size_t max_edges, std::size_t k) {
  std::uniform_int_distribution<std::size_t> side(2, 6);
  std::uniform_real_distribution<double> density(0.25, 0.6);
  for (;;) {
    const std::uint64_t seed = rng();
    const std::size_t m = side(rng), n = side(rng);
    TopologyGraph g;
    switch (k % 3) {
      case 0: g = corpus::random_bipartite(seed, m, n, density(rng)); break;
      case 1: g = corpus::random_bipartite_tree(seed, m, n); break;
      default: g = gen_convex1d(seed, m, n).graph; break;
    }
    if (2 * g.num_edges() >= max_edges && g.num_edges() <= max_edges) return g;
  }
}

std::vector<TopologyGraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<TopologyGraph> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_instance(rng, max_edges, k));
  return out;
}

std::vector<TopologyGraph> chordal_only(std::vector<TopologyGraph> gs) {
  std::erase_if(gs, [](const TopologyGraph& g) { return !is_chordal(g); });
  return gs;
}

Outcome cycle_gap_4() {
  const auto c = certify_suboptimality(gen_cycle(4));
  std::ostringstream os;
  os << "orthogonal_max_sum=" << c.orthogonal_max_sum << " claimed_sum=" << c.claimed_sum << " gap=" << c.gap;
  return {c.orthogonal_max_sum == Rational(2) && c.claimed_sum == Rational(8, 3) && c.gap == Rational(2, 3), os.str()};
}

Outcome cycle_gap_3() {
  const TopologyGraph g = gen_cycle(3);
  const auto c = certify_suboptimality(g);
  const MessageSet ms({{0, 0}, {1, 1}, {2, 2}});
  const RegionPolytope rp = build_region(g, ms);
  const bool single_row = rp.inequalities.size() == 1 && rp.inequalities[0].members == Clique{0, 1, 2};
  RateTuple half;
  for (const Message& m : ms) half[m] = Rational(1, 2);
  const bool violated = !contains(rp, half);
  std::ostringstream os;
  os << "orthogonal_max_sum=" << c.orthogonal_max_sum << " claimed_sum=" << c.claimed_sum
     << " d00+d11+d22<=1 violated=" << (violated ? "yes" : "no");
  return {c.messages == ms && c.orthogonal_max_sum == Rational(1) && c.claimed_sum == Rational(3, 2) && single_row &&
              violated,
          os.str()};
}

Outcome line_graph_equivalence() {
  const auto gs = random_corpus(301, 500, 12);
  std::size_t ok = 0;
  for (const auto& g : gs) ok += square_of_line_graph(g) == conflict_graph(g, all_unicast(g)) ? 1 : 0;
  return {ok == gs.size(), std::to_string(ok) + "/" + std::to_string(gs.size()) + " equal"};
}

Outcome chordal_perfect() {
  const auto gs = chordal_only(random_corpus(401, 200, 16));
  std::size_t ok = 0;
  for (const auto& g : gs) ok += is_perfect(conflict_graph(g, all_unicast(g))) ? 1 : 0;
  return {ok == gs.size() && !gs.empty(), std::to_string(ok) + "/" + std::to_string(gs.size()) +
                                              " chordal instances perfect (of 200 sampled)"};
}

Outcome clique_demand_acyclic() {
  const auto gs = chordal_only(random_corpus(501, 200, 12));
  std::size_t ok = 0, cliques = 0;
  for (const auto& g : gs) {
    const auto r = verify_clique_demand_acyclicity(g);
    ok += r.passed ? 1 : 0;
    cliques += r.checked_cliques;
  }
  return {ok == gs.size() && !gs.empty(), std::to_string(ok) + "/" + std::to_string(gs.size()) + " instances, " +
                                              std::to_string(cliques) + " maximal cliques acyclic"};
}

Outcome integrality() {
  const auto gs = chordal_only(random_corpus(601, 200, 10));
  std::size_t ok = 0, vertices = 0;
  for (const auto& g : gs) {
    const RegionPolytope rp = build_region(g, all_unicast(g));
    ok += integral_vertices_check(rp, 10) ? 1 : 0;
    vertices += enumerate_vertices(rp, 10).size();
  }
  return {ok == gs.size() && !gs.empty(), std::to_string(ok) + "/" + std::to_string(gs.size()) + " instances, " +
                                              std::to_string(vertices) + " vertices all 0/1 with independent support"};
}

Outcome scheduling_completeness() {
  std::mt19937_64 rng(701);
  std::size_t ok = 0, pairs = 0;
  while (pairs < 200) {
    const TopologyGraph g = random_instance(rng, 10, pairs);
    if (!is_chordal(g)) continue;
    const MessageSet ms = all_unicast(g);
    const RegionPolytope rp = build_region(g, ms);
    // Random convex combination of vertices, scaled into the region.
    const auto verts = enumerate_vertices(rp, 10);
    std::vector<std::int64_t> w(verts.size());
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % 9);
    std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    if (total == 0) total = w.back() = 1;
    const Rational scale(static_cast<std::int64_t>(rng() % 7 + 1), 7);
    RationalVector x(ms.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += Rational(w[v], total) * scale * verts[v].coordinates[k];
    }
    const RateTuple r = rate_tuple(rp, x);
    ++pairs;
    try {
      const Schedule s = schedule(g, ms, r);
      ok += verify_schedule(g, ms, r, s) && s.total_weight <= Rational(1) ? 1 : 0;
    } catch (const InfeasibleSchedule&) {
    }
  }
  return {ok == pairs, std::to_string(ok) + "/" + std::to_string(pairs) + " schedules verified"};
}

Outcome convexity_implies_chordal() {
  std::size_t checked = 0, convex = 0, failures = 0;
  for (const TopologyGraph& g : corpus::exhaustive(3)) {
    std::vector<std::size_t> s(g.num_sources()), d(g.num_destinations());
    std::iota(s.begin(), s.end(), 0);
    do {
      std::iota(d.begin(), d.end(), 0);
      do {
        const auto r = convexity_implies_chordal_check(g, {s, d});
        ++checked;
        convex += r.status == ConvexityReport::Status::pass ? 1 : 0;
        failures += r.status == ConvexityReport::Status::fail ? 1 : 0;
      } while (std::next_permutation(d.begin(), d.end()));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  std::mt19937_64 rng(801);
  std::uniform_int_distribution<std::size_t> side(1, 8);
  for (int k = 0; k < 200; ++k) {
    const auto inst = gen_convex1d(rng(), side(rng), side(rng));
    const auto r = convexity_implies_chordal_check(inst.graph, inst.layout);
    ++checked;
    convex += r.status == ConvexityReport::Status::pass ? 1 : 0;
    failures += r.status != ConvexityReport::Status::pass ? 1 : 0;
  }
  return {failures == 0, std::to_string(checked) + " (topology, layout) pairs, " + std::to_string(convex) +
                             " convex, " + std::to_string(failures) + " counterexamples"};
}

Outcome necessity_formula() {
  bool all = true;
  std::ostringstream os;
  for (std::size_t n : {3U, 4U, 5U, 6U}) {
    const TopologyGraph g = gen_cycle(n);
    const auto w = find_chordless_long_cycle(g);
    const bool odd = n % 2 == 1;
    const MessageSet ms = odd ? cycle_interference_messages(*w) : cycle_all_unicast(*w);
    const Rational got = orthogonal_max_sum(g, ms);
    const Rational want = odd ? Rational(static_cast<std::int64_t>(n - 1), 2) : Rational(static_cast<std::int64_t>(n), 2);
    all = all && got == want;
    os << "n=" << n << ": " << got << (got == want ? "" : " (expected " + str(want) + ")") << "; ";
  }
  return {all, os.str()};
}

Outcome capacity_identities() {
  const auto gs = chordal_only(random_corpus(1001, 200, 12));
  std::size_t ok = 0;
  for (const auto& g : gs) {
    const MessageSet ms = all_unicast(g);
    const auto adj = oracle::conflict_matrix(g, ms);
    const auto chi = static_cast<std::int64_t>(oracle::chromatic_number(adj));
    const std::size_t alpha = oracle::independence_number(adj);
    const bool good = symmetric_capacity(g, ms) == Rational(1, chi) && sum_capacity(g, ms) == alpha &&
                      lp_max_sum_rate(g, ms) == Rational(static_cast<std::int64_t>(alpha));
    ok += good ? 1 : 0;
  }
  return {ok == gs.size() && !gs.empty(),
          std::to_string(ok) + "/" + std::to_string(gs.size()) + " chordal instances agree"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cycle gap n=4", 1, cycle_gap_4},
      {2, "cycle gap n=3", 1, cycle_gap_3},
      {3, "conflict graph = square of line graph", 10, line_graph_equivalence},
      {4, "chordal => perfect conflict graph", 60, chordal_perfect},
      {5, "maximal cliques have acyclic demand graphs", 30, clique_demand_acyclic},
      {6, "integral clique-polytope vertices", 120, integrality},
      {7, "scheduling completeness", 120, scheduling_completeness},
      {8, "convexity => chordal", 60, convexity_implies_chordal},
      {9, "necessity formula family", 10, necessity_formula},
      {10, "symmetric/sum capacity identities", 60, capacity_identities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.passed && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %-45s %8.3fs (limit %gs)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, in_time ? "" : " TIMEOUT", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
