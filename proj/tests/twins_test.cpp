#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symdist/family.hpp"
#include "symdist/iso.hpp"
#include "symdist/symmetry.hpp"
#include "symdist/twins.hpp"

using namespace symdist;

namespace {

Graph expr(const char* text) { return construct_family(parse_family_expression(text)); }

}  // namespace

TEST(Twins, PairTestCoversOpenAndClosedTwins) {
  const Graph star = complete_bipartite(1, 3);
  EXPECT_TRUE(are_twins(star, 1, 2));
  EXPECT_FALSE(are_twins(star, 0, 1));
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(are_twins(k3, 0, 2));
  EXPECT_TRUE(are_twins(complete_graph(2), 0, 1));
  EXPECT_FALSE(are_twins(path_graph(4), 0, 3));
}

TEST(Twins, ClassesAgreeWithPairwiseOracle) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, trial % 2 ? 0.5 : 0.2, rng);
    const TwinStructure t = twin_graph(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        EXPECT_EQ(t.class_of[u] == t.class_of[v], oracle::open_twins(g, u, v));
      }
    }
    EXPECT_EQ(t.max_class_size(), oracle::max_twin_class(g));
  }
}

TEST(Twins, ClassTypesAndAlpha) {
  const TwinStructure t = twin_graph(expr("J(K2,E3)"));
  ASSERT_EQ(t.classes.size(), 2u);
  EXPECT_EQ(t.types[0], ClassType::K);
  EXPECT_EQ(t.types[1], ClassType::N);
  EXPECT_EQ(t.alpha, 2);
  EXPECT_EQ(t.quotient, complete_graph(2));

  const TwinStructure p = twin_graph(path_graph(5));
  EXPECT_EQ(p.classes.size(), 5u);
  EXPECT_EQ(p.alpha, 0);
  EXPECT_EQ(p.quotient, path_graph(5));
}

TEST(Twins, CompleteAndEdgelessCollapseToOneVertex) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(twin_graph(complete_graph(n)).quotient.order(), 1);
    EXPECT_EQ(twin_graph(empty_graph(n)).types[0], ClassType::N);
  }
}

// K2 u K2: the two K2 classes are not twins of each other.
TEST(Twins, QuotientCanStillHaveTwins) {
  const TwinStructure t = twin_graph(expr("2*K2"));
  EXPECT_EQ(t.classes.size(), 2u);
  EXPECT_EQ(t.quotient, empty_graph(2));
}

TEST(Twins, BlowUpOfQuotientRecoversGraph) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const TwinStructure t = twin_graph(g);
      EXPECT_TRUE(oracle::isomorphic(blow_up(t.quotient, t.blow_up_parts()), g));
      EXPECT_EQ(expand_twin_structure(t), g);
    }
  }
}

TEST(Twins, AlmostAsymmetric) {
  EXPECT_TRUE(is_almost_asymmetric(path_graph(1)));
  EXPECT_TRUE(is_almost_asymmetric(complete_graph(4)));
  EXPECT_TRUE(is_almost_asymmetric(complete_bipartite(2, 3)));
  EXPECT_FALSE(is_almost_asymmetric(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_almost_asymmetric(path_graph(4)));
  EXPECT_TRUE(is_almost_asymmetric(expr("B(T3;K2,E3,K1,K1,K1,K1,K1)")));
}

TEST(Twins, AlmostAsymmetricMeansDEqualsLargestClass) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 9, 0.5, rng);
    if (!is_almost_asymmetric(g)) continue;
    EXPECT_EQ(distinguishing_number(g), twin_graph(g).max_class_size());
  }
}

TEST(Twins, CoreGraphIsConnected) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const Graph c = core_graph(g);
      EXPECT_TRUE(is_connected(c));
      EXPECT_EQ(c, is_connected(g) ? g : complement(g));
    }
  }
}

// If D(G) equals the size of one class, then D(G) = n - m forces m to be the size of the rest.
TEST(Twins, ClassSizeObservation) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      const int d = distinguishing_number(g);
      const TwinStructure t = twin_graph(g);
      for (const auto& cls : t.classes) {
        if (static_cast<int>(cls.size()) != d) continue;
        const int rest = n - static_cast<int>(cls.size());
        for (int m = 0; m <= n; ++m) {
          if (rest != m) EXPECT_NE(d, n - m);
        }
      }
    }
  }
}
