#pragma once

#include <compare>
#include <string>
#include <vector>

#include "symdist/graph.hpp"
#include "symdist/permutation.hpp"

namespace symdist {

// Largest order accepted by canonical_form / are_isomorphic.
inline constexpr int kMaxCanonicalOrder = 16;
// Largest order enumerate_graphs generates internally.
inline constexpr int kMaxEnumerationOrder = 6;

/// Upper triangle of the canonically relabeled adjacency matrix, row-major
/// ('0'/'1' per pair). Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int order = 0;
  std::string bits;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  Permutation labeling;  // vertex v of the input becomes labeling[v]
  CanonicalForm form;
};

/// Ordered vertex partition. Refinement keeps it equitable: every vertex of
/// a cell has the same number of neighbours in each cell.
using OrderedPartition = std::vector<std::vector<int>>;

/// Refines `cells` to the coarsest equitable partition below it. Splits are
/// ordered by neighbour counts, so the result commutes with relabeling.
void refine_equitable(const Graph& g, OrderedPartition& cells);

/// Minimum upper-triangle string over all labelings reachable by
/// individualisation-refinement from the unit partition. Branches on the
/// first non-singleton cell; twins of an already explored vertex are skipped
/// since swapping them is an automorphism fixing the current partition.
/// Throws SolverLimit above kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Graph obtained by applying the canonical labeling.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// One canonical representative per isomorphism class of order n, sorted by
/// canonical form. Generates all 2^(n choose 2) labeled graphs; throws
/// SolverLimit for n > kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace symdist
