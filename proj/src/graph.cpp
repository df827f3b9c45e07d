#include "symdist/graph.hpp"

#include <algorithm>
#include <string>

#include "symdist/errors.hpp"

namespace symdist {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= vertex_bit(v);
  return s;
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidGraph("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.assign(n, 0);
}

Graph::Graph(int n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {
  check_order(n);
  if (static_cast<int>(rows_.size()) != n) throw InvalidGraph("row count differs from order");
  const VertexSet all = first_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (rows_[v] & ~all) throw InvalidGraph("adjacency row references vertex >= n");
    if (rows_[v] & vertex_bit(v)) throw InvalidGraph("self-loop at vertex " + std::to_string(v));
    for (VertexSet rest = rows_[v]; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!(rows_[u] & vertex_bit(v))) throw InvalidGraph("adjacency is not symmetric");
    }
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += set_size(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : set_members(rows_[u] & ~first_vertices(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> image) const {
  if (static_cast<int>(image.size()) != n_) throw InvalidGraph("relabeling has wrong length");
  VertexSet hit = 0;
  for (int v : image) {
    if (v < 0 || v >= n_) throw InvalidGraph("relabeling image out of range");
    hit |= vertex_bit(v);
  }
  if (hit != vertices()) throw InvalidGraph("relabeling is not a bijection");
  std::vector<VertexSet> rows(n_, 0);
  for (int u = 0; u < n_; ++u) {
    for (VertexSet rest = rows_[u]; rest != 0; rest &= rest - 1) {
      rows[image[u]] |= vertex_bit(image[std::countr_zero(rest)]);
    }
  }
  return Graph(n_, std::move(rows));
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  const std::vector<int> kept = set_members(keep);
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(kept.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (int u : set_members(rows_[kept[i]] & keep)) rows[i] |= vertex_bit(index[u]);
  }
  return Graph(static_cast<int>(kept.size()), std::move(rows));
}

Graph build_graph(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    rows[u] |= vertex_bit(v);
    rows[v] |= vertex_bit(u);
  }
  return Graph(n, std::move(rows));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = ~g.neighbors(v) & g.vertices() & ~vertex_bit(v);
  return Graph(n, std::move(rows));
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross_edges) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw InvalidGraph("combined order " + std::to_string(n) + " exceeds 64");
  const int shift = g.order();
  const VertexSet g_all = g.vertices();
  const auto shifted = [shift](VertexSet x) { return shift >= 64 ? VertexSet{0} : x << shift; };
  const VertexSet h_all = shifted(h.vertices());
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v) | (cross_edges ? h_all : 0);
  for (int v = 0; v < h.order(); ++v) {
    rows[shift + v] = shifted(h.neighbors(v)) | (cross_edges ? g_all : 0);
  }
  return Graph(n, std::move(rows));
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph blow_up(const Graph& base, std::span<const BlowUpPart> parts) {
  if (static_cast<int>(parts.size()) != base.order()) {
    throw InvalidGraph("blow-up needs one part per base vertex (" + std::to_string(base.order()) +
                       "), got " + std::to_string(parts.size()));
  }
  std::vector<int> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size < 1) throw InvalidGraph("blow-up part sizes must be >= 1");
    start[i + 1] = start[i] + parts[i].size;
    if (start[i + 1] > kMaxVertices) throw InvalidGraph("blow-up order exceeds 64");
  }
  const int n = start.back();
  std::vector<VertexSet> block(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    block[i] = first_vertices(start[i + 1]) & ~first_vertices(start[i]);
  }
  std::vector<VertexSet> rows(n, 0);
  for (int i = 0; i < base.order(); ++i) {
    VertexSet cross = 0;
    for (int j : set_members(base.neighbors(i))) cross |= block[j];
    for (int v = start[i]; v < start[i + 1]; ++v) {
      rows[v] = cross | (parts[i].complete ? block[i] & ~vertex_bit(v) : 0);
    }
  }
  return Graph(n, std::move(rows));
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidGraph("path needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidGraph("cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidGraph("complete graph needs at least one vertex");
  return complement(Graph(n));
}

Graph empty_graph(int n) {
  if (n < 1) throw InvalidGraph("empty graph needs at least one vertex");
  return Graph(n);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.empty()) throw InvalidGraph("multipartite graph needs at least one part");
  std::vector<BlowUpPart> parts;
  for (int s : part_sizes) parts.push_back({s, false});
  return blow_up(complete_graph(static_cast<int>(part_sizes.size())), parts);
}

Graph complete_bipartite(int s, int t) {
  const int sizes[] = {s, t};
  return complete_multipartite(sizes);
}

Graph broom_tree(int k) {
  if (k < 3) throw InvalidGraph("broom tree needs root degree k >= 3");
  const int n = 1 + k * (k + 1) / 2;
  if (n > kMaxVertices) throw InvalidGraph("broom tree order exceeds 64");
  std::vector<Edge> e;
  int next = 1;
  for (int len = 1; len <= k; ++len) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_graph(n, e);
}

Graph house_graph() {
  const Edge e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
  return build_graph(5, e);
}

Graph distinguishing_gap_graph(int d, int dim) {
  if (d < 1 || dim <= d) throw InvalidGraph("gap construction needs 1 <= d < dim");
  if (d == 1) return broom_tree(dim + 1);
  const Graph tree = broom_tree(dim - d + 2);
  const Graph clique = complete_graph(d);
  const int n = tree.order() + d;
  if (n > kMaxVertices) throw InvalidGraph("gap construction order exceeds 64");
  std::vector<VertexSet> rows(n, 0);
  for (int v = 0; v < tree.order(); ++v) rows[v] = tree.neighbors(v);
  const VertexSet clique_block = first_vertices(n) & ~first_vertices(tree.order());
  rows[0] |= clique_block;
  for (int v = tree.order(); v < n; ++v) rows[v] = (clique_block & ~vertex_bit(v)) | vertex_bit(0);
  return Graph(n, std::move(rows));
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
  for (int s = 0; s < n_; ++s) {
    int* dist = d_.data() + static_cast<std::size_t>(s) * n_;
    dist[s] = 0;
    VertexSet seen = vertex_bit(s);
    VertexSet frontier = seen;
    for (int level = 1; frontier != 0; ++level) {
      VertexSet next = 0;
      for (int v : set_members(frontier)) next |= g.neighbors(v);
      next &= ~seen;
      for (int v : set_members(next)) dist[v] = level;
      seen |= next;
      frontier = next;
    }
  }
}

DistanceMatrix shortest_path_matrix(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = vertex_bit(0);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v : set_members(frontier)) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

int diameter(const DistanceMatrix& d) {
  int best = 0;
  for (int u = 0; u < d.order(); ++u) {
    for (int x : d.row(u)) {
      if (x == kUnreachable) throw NotConnected("diameter of a disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

int diameter(const Graph& g) { return diameter(DistanceMatrix(g)); }

}  // namespace symdist
