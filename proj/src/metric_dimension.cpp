#include "symdist/metric_dimension.hpp"

#include "symdist/errors.hpp"
#include "symdist/twins.hpp"

namespace symdist {

bool is_resolving(const DistanceMatrix& d, VertexSet s) {
  const int n = d.order();
  const std::vector<int> landmarks = set_members(s);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool separated = false;
      for (int w : landmarks) {
        if (d(u, w) != d(v, w)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool is_resolving(const Graph& g, VertexSet s) {
  if (!is_connected(g)) throw NotConnected("resolving sets need a connected graph");
  return is_resolving(DistanceMatrix(g), s & g.vertices());
}

namespace {

// Visits k-subsets of `pool` in lexicographic order of positions.
template <typename Visit>
bool for_each_subset(const std::vector<int>& pool, int k, Visit&& visit) {
  const int m = static_cast<int>(pool.size());
  if (k > m) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= vertex_bit(pool[i]);
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ResolvingWitness metric_dimension(const Graph& g) {
  if (g.order() < 1) throw InvalidGraph("metric dimension needs at least one vertex");
  if (!is_connected(g)) throw NotConnected("metric dimension needs a connected graph");
  const DistanceMatrix d(g);

  VertexSet forced = 0;
  for (const auto& cls : twin_classes(g)) {
    for (std::size_t i = 1; i < cls.size(); ++i) forced |= vertex_bit(cls[i]);
  }
  const std::vector<int> pool = set_members(g.vertices() & ~forced);

  for (int extra = 0; extra <= static_cast<int>(pool.size()); ++extra) {
    VertexSet found = 0;
    const bool ok = for_each_subset(pool, extra, [&](VertexSet s) {
      if (!is_resolving(d, forced | s)) return false;
      found = forced | s;
      return true;
    });
    if (ok) return {set_size(found), set_members(found)};
  }
  // Unreachable: V(G) always resolves.
  throw std::logic_error("no resolving set found");
}

}  // namespace symdist
