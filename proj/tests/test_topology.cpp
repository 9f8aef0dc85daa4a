#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "chordtim/errors.hpp"
#include "chordtim/topology.hpp"

using namespace chordtim;
using Edge = TopologyGraph::Edge;

TEST(Topology, SixCycleNetworkMatchesCycleGenerator) {
  const std::vector<Edge> edges{{0, 2}, {0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}};
  const TopologyGraph g(3, 3, edges);
  EXPECT_EQ(g.num_edges(), 6U);
  EXPECT_TRUE(g.connected(0, 2));
  EXPECT_FALSE(g.connected(0, 1));
  EXPECT_TRUE(g.antidote(0, 1));
  EXPECT_EQ(g, gen_cycle(3));
}

TEST(Topology, RejectsInvalidInput) {
  const std::vector<Edge> dup{{0, 0}, {0, 0}};
  EXPECT_THROW(TopologyGraph(1, 1, dup), ValidationError);
  const std::vector<Edge> out_of_range{{0, 2}};
  EXPECT_THROW(TopologyGraph(1, 2, out_of_range), ValidationError);
  EXPECT_THROW(TopologyGraph(0, 1, std::vector<Edge>{}), ValidationError);
  EXPECT_THROW(TopologyGraph(1, 0, std::vector<Edge>{}), ValidationError);
}

TEST(Topology, EdgesAreCanonical) {
  const std::vector<Edge> edges{{1, 1}, {0, 1}, {0, 0}};
  const TopologyGraph g(2, 2, edges);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Topology, TransposeAndInduce) {
  const std::vector<Edge> edges{{0, 0}, {0, 1}, {1, 1}};
  const TopologyGraph g(2, 2, edges);
  const TopologyGraph t = g.transposed();
  EXPECT_TRUE(t.connected(1, 0));
  EXPECT_FALSE(t.connected(0, 1));
  EXPECT_EQ(t.transposed(), g);
  const std::vector<std::size_t> s{1}, d{1, 0};
  const TopologyGraph sub = g.induced(s, d);
  EXPECT_EQ(sub.num_sources(), 1U);
  EXPECT_TRUE(sub.connected(0, 0));
  EXPECT_FALSE(sub.connected(0, 1));
}

TEST(Topology, AllUnicast) {
  const std::vector<Edge> matching{{0, 0}, {1, 1}};
  EXPECT_EQ(all_unicast(TopologyGraph(2, 2, matching)).size(), 2U);
  EXPECT_EQ(all_unicast(gen_cycle(3)).size(), 6U);
  EXPECT_EQ(all_unicast(gen_cycle(4)).size(), 8U);
}

TEST(Topology, MessageSetOrderAndLookup) {
  const MessageSet ms({{1, 1}, {0, 1}, {0, 0}});
  EXPECT_EQ(ms[0], (Message{0, 0}));
  EXPECT_EQ(ms[1], (Message{0, 1}));
  EXPECT_EQ(ms[2], (Message{1, 1}));
  EXPECT_EQ(ms.index_of({1, 1}), 2U);
  EXPECT_FALSE(ms.contains({1, 0}));
  EXPECT_EQ(ms.without({0, 1}).size(), 2U);
  EXPECT_THROW(MessageSet({{0, 0}, {0, 0}}), ValidationError);
  const std::vector<Edge> edges{{0, 0}};
  EXPECT_THROW(validate_messages(TopologyGraph(2, 2, edges), MessageSet({{1, 1}})), ValidationError);
}

TEST(Topology, CycleGeneratorShape) {
  EXPECT_THROW(gen_cycle(1), ValidationError);
  for (std::size_t n = 2; n <= 7; ++n) {
    const TopologyGraph g = gen_cycle(n);
    EXPECT_EQ(g.num_edges(), 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t src_deg = 0, dst_deg = 0;
      for (std::size_t j = 0; j < n; ++j) {
        src_deg += g.connected(i, j) ? 1 : 0;
        dst_deg += g.connected(j, i) ? 1 : 0;
      }
      EXPECT_EQ(src_deg, 2U);
      EXPECT_EQ(dst_deg, 2U);
    }
  }
}

TEST(Topology, Convex1dIsDeterministicAndContiguous) {
  const auto a = gen_convex1d(42, 5, 5);
  const auto b = gen_convex1d(42, 5, 5);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.layout, b.layout);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = gen_convex1d(seed, 4, 6);
    std::vector<std::size_t> pos(6);
    for (std::size_t k = 0; k < 6; ++k) pos[inst.layout.destination_order[k]] = k;
    for (std::size_t i = 0; i < 4; ++i) {
      std::set<std::size_t> positions;
      for (std::size_t j = 0; j < 6; ++j) {
        if (inst.graph.connected(i, j)) positions.insert(pos[j]);
      }
      ASSERT_FALSE(positions.empty());
      EXPECT_EQ(*positions.rbegin() - *positions.begin() + 1, positions.size());
    }
  }
}
