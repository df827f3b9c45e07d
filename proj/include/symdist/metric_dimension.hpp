#pragma once

#include <vector>

#include "symdist/graph.hpp"

namespace symdist {

struct ResolvingWitness {
  int dim = 0;
  std::vector<int> witness;  // increasing vertex order
};

/// True iff the distance vectors to `s` are pairwise distinct over V(G).
/// Throws NotConnected on disconnected input.
bool is_resolving(const Graph& g, VertexSet s);
bool is_resolving(const DistanceMatrix& d, VertexSet s);

/// Exact metric dimension. Every resolving set keeps all but at most one
/// vertex of each twin class, and swapping twins is an automorphism, so the
/// search fixes all class members except the smallest and enumerates the
/// rest ascending by size, lexicographically within a size. dim(K1) = 0.
/// Throws NotConnected on disconnected input.
ResolvingWitness metric_dimension(const Graph& g);

}  // namespace symdist
