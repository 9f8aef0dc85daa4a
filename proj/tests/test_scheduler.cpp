#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "chordtim/errors.hpp"
#include "chordtim/scheduler.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chordtim;
using Edge = TopologyGraph::Edge;

namespace {

TopologyGraph z_network() {
  const std::vector<Edge> e{{0, 0}, {0, 1}, {1, 1}};
  return TopologyGraph(2, 2, e);
}

TopologyGraph matching() {
  const std::vector<Edge> e{{0, 0}, {1, 1}};
  return TopologyGraph(2, 2, e);
}

// Random rational point of the region: a random convex combination of its
// vertices, scaled by a random factor in (0, 1].
RateTuple random_point(const RegionPolytope& rp, std::mt19937_64& rng) {
  const auto verts = enumerate_vertices(rp);
  std::vector<std::int64_t> w(verts.size());
  std::int64_t total = 0;
  for (auto& x : w) total += (x = static_cast<std::int64_t>(rng() % 7));
  if (total == 0) total = w[0] = 1;
  const Rational scale(static_cast<std::int64_t>(rng() % 5 + 1), 5);
  RationalVector x(rp.messages.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += Rational(w[v], total) * scale * verts[v].coordinates[k];
  }
  return rate_tuple(rp, x);
}

}  // namespace

TEST(Schedule, ZNetworkThirds) {
  const MessageSet ms = all_unicast(z_network());
  RateTuple r;
  for (const Message& m : ms) r[m] = Rational(1, 3);
  const Schedule s = schedule(z_network(), ms, r);
  ASSERT_EQ(s.slots.size(), 3U);
  for (const auto& slot : s.slots) {
    EXPECT_EQ(slot.messages.size(), 1U);
    EXPECT_EQ(slot.weight, Rational(1, 3));
  }
  EXPECT_EQ(s.total_weight, Rational(1));
  EXPECT_TRUE(verify_schedule(z_network(), ms, r, s));
  EXPECT_EQ(delivered_rates(s), r);
}

TEST(Schedule, MatchingFullRate) {
  const MessageSet ms = all_unicast(matching());
  const RateTuple r{{Message{0, 0}, Rational(1)}, {Message{1, 1}, Rational(1)}};
  const Schedule s = schedule(matching(), ms, r);
  ASSERT_EQ(s.slots.size(), 1U);
  EXPECT_EQ(s.slots[0].messages, (std::vector<Message>{{0, 0}, {1, 1}}));
  EXPECT_EQ(s.slots[0].weight, Rational(1));
}

TEST(Schedule, ZeroRatesGiveEmptySchedule) {
  const Schedule s = schedule(z_network(), all_unicast(z_network()), RateTuple{});
  EXPECT_TRUE(s.slots.empty());
  EXPECT_EQ(s.total_weight, Rational(0));
}

TEST(Schedule, InfeasibleReportsRequiredTime) {
  const MessageSet ms = all_unicast(z_network());
  const RateTuple r{{Message{0, 0}, Rational(1, 2)}, {Message{0, 1}, Rational(1, 3)}, {Message{1, 1}, Rational(1, 3)}};
  EXPECT_EQ(min_cover_time(z_network(), ms, r), Rational(7, 6));
  try {
    schedule(z_network(), ms, r);
    FAIL() << "expected InfeasibleSchedule";
  } catch (const InfeasibleSchedule& e) {
    EXPECT_EQ(e.required_time(), Rational(7, 6));
    EXPECT_EQ(e.gap(), Rational(1, 6));
    EXPECT_TRUE(e.chordal());
  }
}

TEST(Schedule, RejectsBadRates) {
  const MessageSet ms = all_unicast(z_network());
  EXPECT_THROW(schedule(z_network(), ms, RateTuple{{Message{0, 0}, Rational(-1, 2)}}), ValidationError);
  EXPECT_THROW(schedule(z_network(), ms, RateTuple{{Message{1, 0}, Rational(1, 2)}}), ValidationError);
  EXPECT_THROW(schedule(z_network(), ms, RateTuple{}, 2), SizeLimitExceeded);
}

TEST(CheckSchedule, ViolationInjection) {
  const MessageSet ms = all_unicast(z_network());
  const RateTuple r{{Message{0, 0}, Rational(1, 3)}};
  Schedule conflicting{{{{{0, 0}, {1, 1}}, Rational(1, 2)}}, Rational(1, 2)};
  EXPECT_FALSE(verify_schedule(z_network(), ms, r, conflicting));
  Schedule over_budget{{{{{0, 0}}, Rational(1, 2)}, {{{0, 1}}, Rational(2, 3)}}, Rational(7, 6)};
  EXPECT_FALSE(verify_schedule(z_network(), ms, r, over_budget));
  Schedule wrong_total{{{{{0, 0}}, Rational(1, 2)}}, Rational(1)};
  EXPECT_FALSE(verify_schedule(z_network(), ms, r, wrong_total));
  Schedule short_rate{{{{{0, 0}}, Rational(1, 4)}}, Rational(1, 4)};
  EXPECT_FALSE(verify_schedule(z_network(), ms, r, short_rate));
  Schedule unknown{{{{{1, 0}}, Rational(1, 2)}}, Rational(1, 2)};
  EXPECT_FALSE(verify_schedule(z_network(), ms, r, unknown));
  Schedule zero_weight{{{{{0, 0}}, Rational(1, 3)}, {{{1, 1}}, Rational(0)}}, Rational(1, 3)};
  EXPECT_FALSE(verify_schedule(z_network(), ms, r, zero_weight));
  Schedule ok{{{{{0, 0}}, Rational(1, 3)}}, Rational(1, 3)};
  EXPECT_TRUE(verify_schedule(z_network(), ms, r, ok));
}

TEST(CornerPoint, IntegralVertices) {
  const MessageSet z = all_unicast(z_network());
  const Schedule s = corner_point_schedule(z_network(), z, {{1, 0, 0}});
  ASSERT_EQ(s.slots.size(), 1U);
  EXPECT_EQ(s.slots[0].messages, (std::vector<Message>{{0, 0}}));
  EXPECT_EQ(s.slots[0].weight, Rational(1));
  const Schedule m = corner_point_schedule(matching(), all_unicast(matching()), {{1, 1}});
  EXPECT_EQ(m.slots[0].messages, (std::vector<Message>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(corner_point_schedule(z_network(), z, {{0, 0, 0}}).slots.empty());
  EXPECT_THROW(corner_point_schedule(z_network(), z, {{Rational(1, 2), 0, 0}}), ValidationError);
  EXPECT_THROW(corner_point_schedule(z_network(), z, {{1, 1, 0}}), ValidationError);
}

TEST(CornerPoint, EveryChordalVertexSchedules) {
  for (const auto& c : corpus::chordal(9, 40, 8)) {
    const MessageSet ms = all_unicast(c.graph);
    const RegionPolytope rp = build_region(c.graph, ms);
    for (const auto& v : enumerate_vertices(rp)) {
      const Schedule s = corner_point_schedule(c.graph, ms, v);
      EXPECT_TRUE(verify_schedule(c.graph, ms, rate_tuple(rp, v.coordinates), s)) << c.name;
    }
  }
}

TEST(Schedule, RandomRegionPointsOnChordalCorpus) {
  std::mt19937_64 rng(2024);
  for (const auto& c : corpus::chordal(10, 60, 12)) {
    const MessageSet ms = all_unicast(c.graph);
    const RegionPolytope rp = build_region(c.graph, ms);
    for (int trial = 0; trial < 3; ++trial) {
      const RateTuple r = random_point(rp, rng);
      ASSERT_TRUE(contains(rp, r)) << c.name;
      const Schedule s = schedule(c.graph, ms, r);
      EXPECT_EQ(check_schedule(c.graph, ms, r, s), std::nullopt) << c.name;
      EXPECT_LE(s.total_weight, Rational(1)) << c.name;
      RateTuple expected;
      for (const auto& [m, x] : r) {
        if (!x.is_zero()) expected[m] = x;
      }
      EXPECT_EQ(delivered_rates(s), expected) << c.name;
    }
  }
}

TEST(Schedule, Deterministic) {
  const TopologyGraph g = gen_convex1d(5, 4, 4).graph;
  const MessageSet ms = all_unicast(g);
  const RegionPolytope rp = build_region(g, ms);
  std::mt19937_64 rng(1);
  const RateTuple r = random_point(rp, rng);
  EXPECT_EQ(schedule(g, ms, r), schedule(g, ms, r));
}

TEST(LpMaxSum, EqualsIndependenceNumber) {
  for (const auto& c : corpus::mixed(12, 60, 31)) {
    const MessageSet ms = all_unicast(c.graph);
    const auto alpha = oracle::independence_number(oracle::conflict_matrix(c.graph, ms));
    EXPECT_EQ(lp_max_sum_rate(c.graph, ms), Rational(static_cast<std::int64_t>(alpha))) << c.name;
  }
}
