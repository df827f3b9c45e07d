#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symdist/errors.hpp"
#include "symdist/family.hpp"
#include "symdist/iso.hpp"
#include "symdist/metric_dimension.hpp"
#include "symdist/twins.hpp"

using namespace symdist;

TEST(MetricDimension, StandardFamilies) {
  EXPECT_EQ(metric_dimension(Graph(1)).dim, 0);
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(metric_dimension(path_graph(n)).dim, 1) << n;
    EXPECT_EQ(metric_dimension(complete_graph(n)).dim, n - 1) << n;
  }
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(metric_dimension(cycle_graph(n)).dim, 2) << n;
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      if (s + t < 3) continue;
      EXPECT_EQ(metric_dimension(complete_bipartite(s, t)).dim, s + t - 2) << s << "," << t;
    }
  }
  EXPECT_EQ(metric_dimension(house_graph()).dim, 2);
}

TEST(MetricDimension, WitnessIsResolvingAndMinimumSize) {
  const Graph p = path_graph(5);
  const auto r = metric_dimension(p);
  EXPECT_EQ(r.witness, std::vector<int>{0});
  EXPECT_TRUE(is_resolving(p, make_set(r.witness)));
  EXPECT_FALSE(is_resolving(p, make_set(std::vector{2})));
}

TEST(MetricDimension, BroomTreeHasDimensionKMinusOne) {
  for (int k = 3; k <= 5; ++k) EXPECT_EQ(metric_dimension(broom_tree(k)).dim, k - 1) << k;
}

TEST(MetricDimension, DisconnectedInputRejected) {
  EXPECT_THROW(metric_dimension(empty_graph(2)), NotConnected);
  EXPECT_THROW(is_resolving(empty_graph(3), 0b111), NotConnected);
}

TEST(MetricDimension, AgreesWithNaiveSearchOnRandomGraphs) {
  std::mt19937 rng(12);
  int checked = 0;
  while (checked < 150) {
    const Graph g = oracle::random_graph(3 + checked % 9, 0.35, rng);
    if (!oracle::connected(g)) continue;
    const auto r = metric_dimension(g);
    EXPECT_EQ(r.dim, oracle::metric_dimension(g));
    EXPECT_TRUE(oracle::resolves(oracle::floyd_warshall(g), r.witness));
    ++checked;
  }
}

TEST(MetricDimension, InvariantUnderRelabeling) {
  std::mt19937 rng(13);
  for (const Graph& g : enumerate_graphs(6, true)) {
    const auto p = oracle::random_permutation(6, rng);
    EXPECT_EQ(metric_dimension(g).dim, metric_dimension(g.relabeled(p)).dim);
  }
}

// dim(G) = n - 1 exactly for complete graphs.
TEST(MetricDimension, OnlyCompleteGraphsReachNMinusOne) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      EXPECT_EQ(metric_dimension(g).dim == n - 1, g.edge_count() == n * (n - 1) / 2);
    }
  }
}

TEST(MetricDimension, ResolvingIsMonotoneAndWholeSetResolves) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      EXPECT_TRUE(is_resolving(g, g.vertices()));
      for (VertexSet s = 0; s <= g.vertices(); ++s) {
        if (!is_resolving(g, s)) continue;
        for (int v = 0; v < n; ++v) EXPECT_TRUE(is_resolving(g, s | vertex_bit(v)));
      }
    }
  }
}

TEST(MetricDimension, BetweenOneAndNMinusDiameter) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      const int dim = metric_dimension(g).dim;
      EXPECT_GE(dim, 1);
      EXPECT_LE(dim, n - diameter(g));
    }
  }
}

TEST(MetricDimension, WitnessMissesAtMostOneVertexPerTwinClass) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      const VertexSet w = make_set(metric_dimension(g).witness);
      for (const auto& cls : twin_classes(g)) {
        EXPECT_GE(set_size(w & make_set(cls)), static_cast<int>(cls.size()) - 1);
      }
    }
  }
}
