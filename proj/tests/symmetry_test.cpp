#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "symdist/errors.hpp"
#include "symdist/family.hpp"
#include "symdist/iso.hpp"
#include "symdist/metric_dimension.hpp"
#include "symdist/symmetry.hpp"

using namespace symdist;

namespace {

std::set<std::vector<int>> elements(const AutomorphismGroup& group) {
  std::set<std::vector<int>> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto e = group.element(i);
    out.emplace(e.begin(), e.end());
  }
  return out;
}

Graph expr(const char* text) { return construct_family(parse_family_expression(text)); }

}  // namespace

TEST(Automorphisms, KnownGroupOrders) {
  EXPECT_EQ(automorphism_group(cycle_graph(4)).size(), 8u);
  EXPECT_EQ(automorphism_group(cycle_graph(7)).size(), 14u);
  EXPECT_EQ(automorphism_group(complete_graph(6)).size(), 720u);
  EXPECT_EQ(automorphism_group(complete_bipartite(3, 3)).size(), 72u);
  EXPECT_EQ(automorphism_group(path_graph(5)).size(), 2u);
  EXPECT_EQ(automorphism_group(broom_tree(3)).size(), 1u);
  EXPECT_EQ(automorphism_group(house_graph()).size(), 2u);
  EXPECT_EQ(automorphism_group(expr("co(C8)")).size(), 16u);  // same group as C8
  EXPECT_EQ(automorphism_group(Graph(0)).size(), 1u);
}

TEST(Automorphisms, IdentityFirstThenBySupport) {
  const auto group = automorphism_group(complete_bipartite(2, 3));
  ASSERT_EQ(group.size(), 12u);
  EXPECT_TRUE(group.permutation(0).is_identity());
  for (std::size_t i = 1; i < group.size(); ++i) {
    EXPECT_LE(group.permutation(i - 1).support_size(), group.permutation(i).support_size());
  }
}

TEST(Automorphisms, MatchBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const auto brute = oracle::automorphisms(g);
      EXPECT_EQ(elements(automorphism_group(g)), std::set<std::vector<int>>(brute.begin(), brute.end()));
    }
  }
}

TEST(Automorphisms, Limits) {
  EXPECT_THROW(automorphism_group(Graph(17)), SolverLimit);
  EXPECT_THROW(automorphism_group(Graph(11)), SolverLimit);  // 11! exceeds the group cap
  EXPECT_EQ(automorphism_group(Graph(10)).size(), 3628800u);
}

TEST(Orbits, PathAndStar) {
  EXPECT_EQ(vertex_orbits(path_graph(4)), (std::vector<std::vector<int>>{{0, 3}, {1, 2}}));
  EXPECT_EQ(vertex_orbits(complete_bipartite(1, 3)), (std::vector<std::vector<int>>{{0}, {1, 2, 3}}));
}

TEST(Coloring, RejectsColoursOutsideRange) {
  EXPECT_THROW(Coloring({1, 2, 3}, 2), std::invalid_argument);
  EXPECT_THROW(Coloring({0, 1}, 2), std::invalid_argument);
}

TEST(Distinguishing, SpecExamples) {
  EXPECT_EQ(distinguishing_number(Graph(1)), 1);
  EXPECT_EQ(distinguishing_number(complete_graph(5)), 5);
  EXPECT_EQ(distinguishing_number(empty_graph(5)), 5);
  EXPECT_EQ(distinguishing_number(complete_bipartite(3, 3)), 4);
  EXPECT_EQ(distinguishing_number(cycle_graph(4)), 3);
  EXPECT_EQ(distinguishing_number(cycle_graph(5)), 3);
  EXPECT_EQ(distinguishing_number(cycle_graph(6)), 2);
  EXPECT_EQ(distinguishing_number(path_graph(6)), 2);
  EXPECT_EQ(distinguishing_number(broom_tree(4)), 1);
  EXPECT_EQ(distinguishing_number(expr("2*K3")), 4);
}

TEST(Distinguishing, WitnessIsDistinguishingWithExactlyDColours) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const auto r = distinguishing_coloring(g);
      EXPECT_EQ(r.witness.colors(), r.number);
      EXPECT_TRUE(is_distinguishing(g, r.witness));
    }
  }
}

TEST(Distinguishing, MatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      EXPECT_EQ(distinguishing_number(g), oracle::distinguishing_number(g));
    }
  }
}

// Frozen from the brute-force oracle: (n, D) -> number of graphs.
TEST(Distinguishing, DistributionByOrder) {
  const std::map<std::pair<int, int>, int> expected{
      {{4, 2}, 5},  {{4, 3}, 4},  {{4, 4}, 2},  {{5, 2}, 17}, {{5, 3}, 13}, {{5, 4}, 2},
      {{5, 5}, 2},  {{6, 1}, 8},  {{6, 2}, 96}, {{6, 3}, 38}, {{6, 4}, 10}, {{6, 5}, 2}, {{6, 6}, 2}};
  std::map<std::pair<int, int>, int> actual;
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) ++actual[{n, distinguishing_number(g)}];
  }
  EXPECT_EQ(actual, expected);
}

TEST(Distinguishing, RandomLargerGraphsAgreeWithBruteForce) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(7, trial % 2 ? 0.3 : 0.6, rng);
    EXPECT_EQ(distinguishing_number(g), oracle::distinguishing_number(g));
  }
}

TEST(Distinguishing, AtLeastLargestTwinClass) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 10, 0.5, rng);
    EXPECT_GE(distinguishing_number(g), oracle::max_twin_class(g));
  }
}

TEST(ResolvingColoring, IsDistinguishing) {
  const Graph g = cycle_graph(6);
  const auto r = metric_dimension(g);
  const Coloring c = coloring_from_resolving_set(g, r.witness);
  EXPECT_EQ(c.colors(), r.dim + 1);
  EXPECT_TRUE(is_distinguishing(g, c));
}

TEST(ResolvingColoring, RejectsBadSets) {
  const Graph g = cycle_graph(6);
  EXPECT_THROW(coloring_from_resolving_set(g, std::vector{0}), std::invalid_argument);
  EXPECT_THROW(coloring_from_resolving_set(g, std::vector{0, 0}), std::invalid_argument);
  EXPECT_THROW(coloring_from_resolving_set(empty_graph(3), std::vector{0}), NotConnected);
}

TEST(Automorphisms, PreserveDistances) {
  for (const Graph& g : enumerate_graphs(6, true)) {
    const DistanceMatrix d = shortest_path_matrix(g);
    const auto group = automorphism_group(g);
    for (std::size_t e = 0; e < group.size(); ++e) {
      const auto a = group.element(e);
      for (int u = 0; u < 6; ++u) {
        for (int v = 0; v < 6; ++v) EXPECT_EQ(d(u, v), d(a[u], a[v]));
      }
    }
  }
}

TEST(Distinguishing, WithinOneAndN) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const int d = distinguishing_number(g);
      EXPECT_GE(d, 1);
      EXPECT_LE(d, n);
      std::vector<int> distinct(n);
      std::iota(distinct.begin(), distinct.end(), 1);
      EXPECT_TRUE(is_distinguishing(g, Coloring(distinct, n)));
    }
  }
}

TEST(Distinguishing, HouseNeedsTwoColours) { EXPECT_EQ(distinguishing_number(house_graph()), 2); }
