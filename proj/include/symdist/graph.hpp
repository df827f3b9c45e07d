#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace symdist {

inline constexpr int kMaxVertices = 64;

// Bit v set <=> vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int set_size(VertexSet s) { return std::popcount(s); }
std::vector<int> set_members(VertexSet s);
VertexSet make_set(std::span<const int> vertices);

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per
/// vertex. Values are immutable once constructed.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Takes ownership of adjacency rows; throws InvalidGraph unless the rows
  /// describe a symmetric, irreflexive relation on n vertices.
  Graph(int n, std::vector<VertexSet> rows);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const { return rows_[v] | vertex_bit(v); }
  int degree(int v) const { return set_size(rows_[v]); }
  int edge_count() const;
  VertexSet vertices() const { return first_vertices(n_); }
  std::span<const VertexSet> rows() const { return rows_; }
  std::vector<Edge> edges() const;

  /// Graph in which vertex v of *this becomes vertex image[v].
  Graph relabeled(std::span<const int> image) const;

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph build_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

struct BlowUpPart {
  int size = 1;
  bool complete = true;  // K_size when true, edgeless otherwise

  bool operator==(const BlowUpPart&) const = default;
};

/// G[H_1, ..., H_n]: vertex i becomes a clique or independent set of
/// parts[i].size vertices; parts i and j are completely joined exactly when
/// i and j are adjacent in `base`. Part i occupies a contiguous block of
/// labels, in part order.
Graph blow_up(const Graph& base, std::span<const BlowUpPart> parts);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> part_sizes);
Graph complete_bipartite(int s, int t);

/// Rooted tree with root degree k whose k branches are paths of lengths
/// 1..k. Vertex 0 is the root; branch i occupies the next i labels, ordered
/// outward. Requires k >= 3 (asymmetric from there on).
Graph broom_tree(int k);

/// 5-cycle 0-1-2-3-4 plus the chord {0,2}; degree sequence (3,3,2,2,2).
Graph house_graph();

/// Graph with distinguishing number `d` and metric dimension `dim`
/// (1 <= d < dim): broom_tree(dim + 1) when d == 1, otherwise
/// broom_tree(dim - d + 2) with its root joined to every vertex of a fresh
/// K_d (labels after the tree).
Graph distinguishing_gap_graph(int d, int dim);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(int u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  int n_;
  std::vector<int> d_;
};

/// BFS hop distances; kUnreachable across components.
DistanceMatrix shortest_path_matrix(const Graph& g);

bool is_connected(const Graph& g);

/// Throws NotConnected for disconnected input.
int diameter(const Graph& g);
int diameter(const DistanceMatrix& d);

}  // namespace symdist
