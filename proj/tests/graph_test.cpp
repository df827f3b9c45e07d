#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "symdist/errors.hpp"
#include "symdist/graph.hpp"
#include "symdist/iso.hpp"

using namespace symdist;

TEST(Graph, RejectsLoopsAsymmetryAndOversize) {
  EXPECT_THROW(Graph(-1), InvalidGraph);
  EXPECT_THROW(Graph(65), InvalidGraph);
  EXPECT_THROW(Graph(2, {0b01, 0b00}), InvalidGraph);  // loop
  EXPECT_THROW(Graph(2, {0b10, 0b00}), InvalidGraph);  // one-sided edge
  EXPECT_THROW(Graph(2, {0b100, 0b000}), InvalidGraph);
  const Edge loop{1, 1};
  EXPECT_THROW(build_graph(3, std::span(&loop, 1)), InvalidGraph);
  const Edge out{0, 3};
  EXPECT_THROW(build_graph(3, std::span(&out, 1)), InvalidGraph);
  EXPECT_NO_THROW(Graph(64));
}

TEST(Graph, BasicAccessors) {
  const Graph p = path_graph(4);
  EXPECT_EQ(p.order(), 4);
  EXPECT_EQ(p.edge_count(), 3);
  EXPECT_EQ(p.degree(0), 1);
  EXPECT_EQ(p.degree(1), 2);
  EXPECT_EQ(p.closed_neighbors(1), make_set(std::vector{0, 1, 2}));
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Graph, NamedGraphSizes) {
  EXPECT_EQ(complete_graph(6).edge_count(), 15);
  EXPECT_EQ(empty_graph(6).edge_count(), 0);
  EXPECT_EQ(cycle_graph(7).edge_count(), 7);
  EXPECT_THROW(cycle_graph(2), InvalidGraph);
  EXPECT_EQ(complete_bipartite(3, 4).edge_count(), 12);
  const std::vector<int> parts{1, 2, 2};
  EXPECT_EQ(complete_multipartite(parts).edge_count(), 8);
  const Graph h = house_graph();
  EXPECT_EQ(h.order(), 5);
  EXPECT_EQ(h.edge_count(), 6);
}

TEST(Graph, BroomTreeShape) {
  EXPECT_THROW(broom_tree(2), InvalidGraph);
  for (int k = 3; k <= 6; ++k) {
    const Graph t = broom_tree(k);
    EXPECT_EQ(t.order(), 1 + k * (k + 1) / 2);
    EXPECT_EQ(t.edge_count(), t.order() - 1);
    EXPECT_TRUE(oracle::connected(t));
    EXPECT_EQ(t.degree(0), k);
    int leaves = 0;
    for (int v = 0; v < t.order(); ++v) leaves += t.degree(v) == 1;
    EXPECT_EQ(leaves, k);
    EXPECT_EQ(diameter(t), 2 * k - 1);
  }
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.edge_count() + complement(g).edge_count(), g.order() * (g.order() - 1) / 2);
  }
}

TEST(Graph, JoinIsComplementOfUnionOfComplements) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 6, 0.5, rng);
    const Graph h = oracle::random_graph(1 + trial % 5, 0.5, rng);
    EXPECT_EQ(join(g, h), complement(disjoint_union(complement(g), complement(h))));
    const Graph u = disjoint_union(g, h);
    EXPECT_EQ(u.order(), g.order() + h.order());
    EXPECT_EQ(u.edge_count(), g.edge_count() + h.edge_count());
  }
}

TEST(Graph, BlowUpMatchesDirectDefinition) {
  const Graph p4 = path_graph(4);
  const std::vector<BlowUpPart> parts{{1, true}, {3, false}, {2, true}, {1, true}};
  const Graph b = blow_up(p4, parts);
  ASSERT_EQ(b.order(), 7);
  // vertices: 0 | 1 2 3 | 4 5 | 6
  EXPECT_EQ(b.edge_count(), 3 + 0 + 6 + 1 + 2);
  EXPECT_FALSE(b.adjacent(1, 2));
  EXPECT_TRUE(b.adjacent(4, 5));
  EXPECT_TRUE(b.adjacent(0, 3));
  EXPECT_FALSE(b.adjacent(0, 4));

  const std::vector<BlowUpPart> units(5, BlowUpPart{});
  EXPECT_EQ(blow_up(house_graph(), units), house_graph());
  EXPECT_THROW(blow_up(p4, std::span(parts).first(3)), InvalidGraph);
}

TEST(Graph, BlowUpOfK2IsJoin) {
  const Graph k2 = complete_graph(2);
  const std::vector<BlowUpPart> parts{{3, false}, {2, true}};
  EXPECT_EQ(blow_up(k2, parts), join(empty_graph(3), complete_graph(2)));
  EXPECT_EQ(blow_up(empty_graph(2), parts), disjoint_union(empty_graph(3), complete_graph(2)));
}

TEST(Graph, DistancesAgreeWithFloydWarshall) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 14, 0.25, rng);
    const auto ref = oracle::floyd_warshall(g);
    const DistanceMatrix d = shortest_path_matrix(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        if (ref[u][v] >= (1 << 20)) {
          EXPECT_EQ(d(u, v), kUnreachable);
        } else {
          EXPECT_EQ(d(u, v), ref[u][v]);
        }
      }
    }
    EXPECT_EQ(is_connected(g), oracle::connected(g));
    if (oracle::connected(g)) {
      EXPECT_EQ(diameter(g), oracle::diameter(g));
    } else {
      EXPECT_THROW(diameter(g), NotConnected);
    }
  }
}

TEST(Graph, RelabelAndInduce) {
  const Graph p = path_graph(4);
  const std::vector<int> rev{3, 2, 1, 0};
  EXPECT_EQ(p.relabeled(rev), p);
  const std::vector<int> swap{1, 0, 2, 3};
  EXPECT_EQ(p.relabeled(swap).edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
  const std::vector<int> bad{0, 0, 1, 2};
  EXPECT_THROW(p.relabeled(bad), InvalidGraph);
  EXPECT_EQ(cycle_graph(5).induced(make_set(std::vector{0, 1, 2, 3})), path_graph(4));
}

TEST(Graph, GapConstructionOrders) {
  EXPECT_EQ(distinguishing_gap_graph(1, 2).order(), broom_tree(3).order());
  EXPECT_EQ(distinguishing_gap_graph(1, 4).order(), 16);
  EXPECT_EQ(distinguishing_gap_graph(3, 4).order(), 7 + 3);
  EXPECT_THROW(distinguishing_gap_graph(2, 2), InvalidGraph);
  EXPECT_THROW(distinguishing_gap_graph(0, 3), InvalidGraph);
}

TEST(Graph, DistanceMatrixIsAMetricOnComponents) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.3, rng);
    const DistanceMatrix d = shortest_path_matrix(g);
    for (int u = 0; u < g.order(); ++u) {
      EXPECT_EQ(d(u, u), 0);
      for (int v = 0; v < g.order(); ++v) {
        EXPECT_EQ(d(u, v), d(v, u));
        for (int w = 0; w < g.order(); ++w) {
          if (d(u, w) == kUnreachable || d(w, v) == kUnreachable) continue;
          EXPECT_LE(d(u, v), d(u, w) + d(w, v));
        }
      }
    }
  }
}

TEST(Graph, BroomTreeLeafDepths) {
  for (int k = 3; k <= 6; ++k) {
    const Graph t = broom_tree(k);
    const DistanceMatrix d = shortest_path_matrix(t);
    std::vector<int> depths;
    for (int v = 1; v < t.order(); ++v) {
      if (t.degree(v) == 1) depths.push_back(d(0, v));
    }
    std::sort(depths.begin(), depths.end());
    std::vector<int> expected(k);
    std::iota(expected.begin(), expected.end(), 1);
    EXPECT_EQ(depths, expected);
  }
}

// The house: a 5-cycle with one chord.
TEST(Graph, HouseGraphShape) {
  const Graph h = house_graph();
  EXPECT_EQ(diameter(h), 2);
  std::vector<int> degrees;
  for (int v = 0; v < 5; ++v) degrees.push_back(h.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{2, 2, 2, 3, 3}));
  EXPECT_TRUE(is_connected(h.induced(make_set(std::vector{0, 1, 2}))));
}
