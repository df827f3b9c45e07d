#include "symdist/iso.hpp"

#include <algorithm>
#include <map>

#include "symdist/errors.hpp"
#include "symdist/twins.hpp"

namespace symdist {

void refine_equitable(const Graph& g, OrderedPartition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const VertexSet splitter = make_set(cells[w]);
      OrderedPartition next;
      next.reserve(cells.size() + 1);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(set_size(g.neighbors(v) & splitter), v);
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      if (next.size() != cells.size()) {
        cells = std::move(next);
        changed = true;
      }
    }
  }
}

namespace {

std::string upper_triangle(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::string bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) bits.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
  }
  return bits;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), twins_(g.order(), 0) {
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        if (u != v && are_twins(g, u, v)) twins_[u] |= vertex_bit(v);
      }
    }
  }

  CanonicalLabeling run() {
    OrderedPartition unit(1);
    for (int v = 0; v < g_.order(); ++v) unit[0].push_back(v);
    if (g_.order() > 0) explore(std::move(unit));
    std::vector<int> image(g_.order());
    for (int i = 0; i < g_.order(); ++i) image[best_order_[i]] = i;
    return {Permutation(std::move(image)), {g_.order(), best_}};
  }

 private:
  void explore(OrderedPartition cells) {
    refine_equitable(g_, cells);
    const auto open = std::find_if(cells.begin(), cells.end(),
                                   [](const auto& c) { return c.size() > 1; });
    if (open == cells.end()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const auto& c : cells) order.push_back(c.front());
      std::string bits = upper_triangle(g_, order);
      if (!found_ || bits < best_) {
        found_ = true;
        best_ = std::move(bits);
        best_order_ = std::move(order);
      }
      return;
    }
    const auto idx = static_cast<std::size_t>(open - cells.begin());
    VertexSet tried = 0;
    for (int v : cells[idx]) {
      if (twins_[v] & tried) continue;
      tried |= vertex_bit(v);
      OrderedPartition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + idx);
      child.push_back({v});
      child.emplace_back();
      for (int u : cells[idx]) {
        if (u != v) child.back().push_back(u);
      }
      child.insert(child.end(), cells.begin() + idx + 1, cells.end());
      explore(std::move(child));
    }
  }

  const Graph& g_;
  std::vector<VertexSet> twins_;
  bool found_ = false;
  std::string best_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw SolverLimit("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder) +
                      ", got " + std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling c = canonical_labeling(g);
  return g.relabeled(c.labeling.images());
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw SolverLimit("internal enumeration supports order <= " +
                      std::to_string(kMaxEnumerationOrder) + "; supply a graph6 file for order " +
                      std::to_string(n));
  }
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::map<CanonicalForm, Graph> classes;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<VertexSet> rows(n, 0);
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if ((mask >> e) & 1U) {
        rows[slots[e].first] |= vertex_bit(slots[e].second);
        rows[slots[e].second] |= vertex_bit(slots[e].first);
      }
    }
    Graph g(n, std::move(rows));
    if (connected_only && !is_connected(g)) continue;
    CanonicalLabeling c = canonical_labeling(g);
    if (!classes.contains(c.form)) classes.emplace(c.form, g.relabeled(c.labeling.images()));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace symdist
