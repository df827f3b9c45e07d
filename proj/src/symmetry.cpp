#include "symdist/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <string>

#include "symdist/errors.hpp"
#include "symdist/iso.hpp"
#include "symdist/metric_dimension.hpp"
#include "symdist/twins.hpp"

namespace symdist {

AutomorphismGroup::AutomorphismGroup(int degree, std::vector<std::uint8_t> images)
    : degree_(degree), images_(std::move(images)) {
  if (degree_ > 0 && images_.size() % degree_ != 0) {
    throw std::invalid_argument("automorphism storage is not a multiple of the degree");
  }
}

Permutation AutomorphismGroup::permutation(std::size_t i) const {
  const auto e = element(i);
  return Permutation(std::vector<int>(e.begin(), e.end()));
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()), image_(n_, -1) {
    OrderedPartition cells(1);
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    refine_equitable(g, cells);
    cell_of_.assign(n_, 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of_[v] = static_cast<int>(c);
    }
    cells_ = std::move(cells);

    // Map vertices with many already-mapped neighbours first.
    VertexSet placed = 0;
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      std::tuple<int, std::size_t, int> best{};
      for (int v : set_members(g.vertices() & ~placed)) {
        const std::tuple<int, std::size_t, int> key{-set_size(g.neighbors(v) & placed),
                                                     cells_[cell_of_[v]].size(), v};
        if (pick < 0 || key < best) {
          best = key;
          pick = v;
        }
      }
      order_.push_back(pick);
      placed |= vertex_bit(pick);
    }
  }

  std::vector<std::uint8_t> run() {
    extend(0, 0, 0);
    return std::move(found_);
  }

 private:
  void extend(int depth, VertexSet domain, VertexSet range) {
    if (depth == n_) {
      if (found_.size() / std::max(n_, 1) >= kMaxGroupOrder) {
        throw SolverLimit("automorphism group larger than " + std::to_string(kMaxGroupOrder));
      }
      for (int v = 0; v < n_; ++v) found_.push_back(static_cast<std::uint8_t>(image_[v]));
      return;
    }
    const int v = order_[depth];
    for (int w : cells_[cell_of_[v]]) {
      if (range & vertex_bit(w)) continue;
      bool consistent = true;
      for (int u : set_members(domain)) {
        if (g_.adjacent(u, v) != g_.adjacent(image_[u], w)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      image_[v] = w;
      extend(depth + 1, domain | vertex_bit(v), range | vertex_bit(w));
      image_[v] = -1;
    }
  }

  const Graph& g_;
  int n_;
  OrderedPartition cells_;
  std::vector<int> cell_of_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<std::uint8_t> found_;
};

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g) {
  const int n = g.order();
  if (n > kMaxAutomorphismOrder) {
    throw SolverLimit("automorphism group supports order <= " +
                      std::to_string(kMaxAutomorphismOrder) + ", got " + std::to_string(n));
  }
  if (n == 0) return AutomorphismGroup(0, {});
  std::vector<std::uint8_t> flat = AutomorphismSearch(g).run();
  const std::size_t count = flat.size() / n;

  std::vector<int> support(count, 0);
  for (std::size_t e = 0; e < count; ++e) {
    for (int v = 0; v < n; ++v) support[e] += flat[e * n + v] != v;
  }
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (support[a] != support[b]) return support[a] < support[b];
    return std::lexicographical_compare(flat.begin() + a * n, flat.begin() + (a + 1) * n,
                                        flat.begin() + b * n, flat.begin() + (b + 1) * n);
  });
  std::vector<std::uint8_t> sorted;
  sorted.reserve(flat.size());
  for (std::size_t e : idx) sorted.insert(sorted.end(), flat.begin() + e * n, flat.begin() + (e + 1) * n);
  return AutomorphismGroup(n, std::move(sorted));
}

std::vector<std::vector<int>> vertex_orbits(const AutomorphismGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 1; e < group.size(); ++e) {
    const auto image = group.element(e);
    for (int v = 0; v < n; ++v) {
      const int a = find(v);
      const int b = find(image[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(v);
  }
  return orbits;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g) {
  return vertex_orbits(automorphism_group(g));
}

Coloring::Coloring(std::vector<int> color, int k) : color_(std::move(color)), k_(k) {
  for (int c : color_) {
    if (c < 1 || c > k_) throw std::invalid_argument("colour outside 1..k");
  }
}

bool is_distinguishing(const AutomorphismGroup& group, const Coloring& c) {
  if (c.size() != group.degree()) throw std::invalid_argument("colouring size differs from graph order");
  const int n = c.size();
  std::vector<int> seen(c.colors() + 1, 0);
  bool all_distinct = true;
  for (int v = 0; v < n && all_distinct; ++v) all_distinct = seen[c[v]]++ == 0;
  if (all_distinct) return true;

  for (std::size_t e = 1; e < group.size(); ++e) {
    const auto image = group.element(e);
    bool preserves = true;
    for (int v = 0; v < n; ++v) {
      if (c[image[v]] != c[v]) {
        preserves = false;
        break;
      }
    }
    if (preserves) return false;
  }
  return true;
}

bool is_distinguishing(const Graph& g, const Coloring& c) {
  return is_distinguishing(automorphism_group(g), c);
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const AutomorphismGroup& group, std::vector<VertexSet> earlier_twins)
      : group_(group), twins_(std::move(earlier_twins)), color_(group.degree(), 0) {}

  bool run(int k) {
    k_ = k;
    return assign(0, 0);
  }
  Coloring witness() const { return Coloring(color_, k_); }

 private:
  bool assign(int v, int used) {
    const int n = group_.degree();
    if (v == n) return is_distinguishing(group_, Coloring(color_, k_));
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      bool clash = false;
      for (int u : set_members(twins_[v])) {
        if (color_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (assign(v + 1, std::max(used, c))) return true;
    }
    color_[v] = 0;
    return false;
  }

  const AutomorphismGroup& group_;
  std::vector<VertexSet> twins_;
  std::vector<int> color_;
  int k_ = 0;
};

}  // namespace

DistinguishingResult distinguishing_coloring(const Graph& g, const AutomorphismGroup& group) {
  const int n = g.order();
  if (n == 0) return {0, Coloring()};
  if (group.size() == 1) return {1, Coloring(std::vector<int>(n, 1), 1)};

  const TwinStructure twins = twin_graph(g);
  std::vector<VertexSet> earlier(n, 0);
  for (const auto& cls : twins.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) earlier[cls[i]] |= vertex_bit(cls[j]);
    }
  }
  ColoringSearch search(group, std::move(earlier));
  for (int k = std::max(1, twins.max_class_size()); k <= n; ++k) {
    if (search.run(k)) return {k, search.witness()};
  }
  throw std::logic_error("all-distinct colouring was not distinguishing");
}

DistinguishingResult distinguishing_coloring(const Graph& g) {
  return distinguishing_coloring(g, automorphism_group(g));
}

int distinguishing_number(const Graph& g) { return distinguishing_coloring(g).number; }

Coloring coloring_from_resolving_set(const Graph& g, std::span<const int> resolving_set) {
  if (!is_connected(g)) throw NotConnected("resolving-set colouring needs a connected graph");
  for (int v : resolving_set) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("resolving set vertex out of range");
  }
  const VertexSet s = make_set(resolving_set);
  if (set_size(s) != static_cast<int>(resolving_set.size())) {
    throw std::invalid_argument("resolving set lists a vertex twice");
  }
  if (!is_resolving(g, s)) throw std::invalid_argument("vertex set does not resolve the graph");
  const int k = static_cast<int>(resolving_set.size()) + 1;
  std::vector<int> color(g.order(), k);
  for (std::size_t i = 0; i < resolving_set.size(); ++i) color[resolving_set[i]] = static_cast<int>(i) + 1;
  return Coloring(std::move(color), k);
}

}  // namespace symdist
