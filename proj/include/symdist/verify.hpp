#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symdist/catalog.hpp"
#include "symdist/graph.hpp"

namespace symdist {

struct Counterexample {
  std::string graph6;
  std::string expected;
  int actual_d = 0;
  std::string detail;
};

struct VerifyReport {
  std::string subject;  // "bound", "construction", or a theorem id
  int order = 0;        // 0 when not tied to one order
  bool applicable = true;
  std::size_t scanned = 0;
  std::size_t matches = 0;
  std::vector<Counterexample> counterexamples;
  // Dn3 only: scanned graphs outside family F that have D = n - 3, and listed
  // instances outside F. Reported, never counted as failures.
  std::vector<std::string> outside_family_F;
  std::vector<std::string> listed_outside_family_F;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  bool pass() const { return counterexamples.empty(); }
};

/// Graphs of order n: the internal enumeration when `external` is empty,
/// otherwise the members of `external` with order n, deduplicated and sorted
/// by canonical form.
std::vector<Graph> graphs_of_order(int n, bool connected_only, std::span<const Graph> external = {});

/// D(G) <= dim(G) + 1 on every connected graph, and the colouring built from
/// a minimum resolving set is distinguishing.
VerifyReport verify_bound(std::span<const Graph> connected_graphs, int order, int jobs);

/// For 1 <= d < dim <= max_dim: distinguishing_gap_graph(d, dim) has exactly
/// that distinguishing number and metric dimension.
VerifyReport verify_construction(int max_dim, int jobs);

/// Two-sided check of a characterisation list at order n against `graphs`
/// (all graphs of order n, one per isomorphism class).
VerifyReport verify_theorem(TheoremId id, int n, std::span<const Graph> graphs, int jobs);

}  // namespace symdist
