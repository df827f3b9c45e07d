#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symdist/graph.hpp"
#include "symdist/permutation.hpp"

namespace symdist {

// Largest graph order accepted by automorphism_group.
inline constexpr int kMaxAutomorphismOrder = 16;
// Largest group listed in full (|S_10|).
inline constexpr std::size_t kMaxGroupOrder = 3628800;

/// Every automorphism of a graph, stored flat (one byte per image) and sorted
/// by support size ascending, ties lexicographic. Element 0 is the identity.
class AutomorphismGroup {
 public:
  AutomorphismGroup(int degree, std::vector<std::uint8_t> images);

  int degree() const { return degree_; }
  std::size_t size() const { return degree_ == 0 ? 1 : images_.size() / degree_; }
  std::span<const std::uint8_t> element(std::size_t i) const {
    return {images_.data() + i * degree_, static_cast<std::size_t>(degree_)};
  }
  Permutation permutation(std::size_t i) const;

 private:
  int degree_;
  std::vector<std::uint8_t> images_;
};

/// Backtracking over vertex images restricted to cells of the coarsest
/// equitable partition, checking adjacency against already mapped vertices.
/// Throws SolverLimit above kMaxAutomorphismOrder vertices or
/// kMaxGroupOrder elements.
AutomorphismGroup automorphism_group(const Graph& g);

/// Orbits of the automorphism group, each sorted, ordered by smallest member.
std::vector<std::vector<int>> vertex_orbits(const Graph& g);
std::vector<std::vector<int>> vertex_orbits(const AutomorphismGroup& group);

/// Vertex colouring with colours 1..k; not every colour has to be used.
class Coloring {
 public:
  Coloring() = default;
  /// Throws std::invalid_argument if some colour lies outside 1..k.
  Coloring(std::vector<int> color, int k);

  int colors() const { return k_; }
  int operator[](int v) const { return color_[v]; }
  std::span<const int> values() const { return color_; }
  int size() const { return static_cast<int>(color_.size()); }

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> color_;
  int k_ = 0;
};

/// No non-identity automorphism preserves every colour. Stops at the first
/// colour-preserving element.
bool is_distinguishing(const Graph& g, const Coloring& c);
bool is_distinguishing(const AutomorphismGroup& group, const Coloring& c);

struct DistinguishingResult {
  int number = 0;
  Coloring witness;
};

/// Least k admitting a distinguishing colouring. Candidate k ascend from the
/// largest twin class (twins sharing a colour are swapped by an
/// automorphism); colourings are enumerated as restricted growth strings with
/// twins forced apart. D(K1) = 1.
DistinguishingResult distinguishing_coloring(const Graph& g);
DistinguishingResult distinguishing_coloring(const Graph& g, const AutomorphismGroup& group);
int distinguishing_number(const Graph& g);

/// Colours resolving_set[i] with i+1 and every other vertex with
/// |resolving_set|+1. Throws NotConnected for disconnected graphs and
/// std::invalid_argument when the set does not resolve g.
Coloring coloring_from_resolving_set(const Graph& g, std::span<const int> resolving_set);

}  // namespace symdist
