#include "symdist/twins.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symdist/symmetry.hpp"

namespace symdist {

bool are_twins(const Graph& g, int u, int v) {
  if (u == v) return true;
  return (g.neighbors(u) & ~vertex_bit(v)) == (g.neighbors(v) & ~vertex_bit(u));
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> leader(n);
  std::iota(leader.begin(), leader.end(), 0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (leader[u] == u && are_twins(g, u, v)) {
        leader[v] = u;
        break;
      }
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (leader[v] == v) {
      index[v] = static_cast<int>(classes.size());
      classes.push_back({v});
    } else {
      classes[index[leader[v]]].push_back(v);
    }
  }
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!are_twins(g, cls[i], cls[j])) throw std::logic_error("twin relation is not transitive");
      }
    }
  }
  // Maximality: members of distinct classes are never twins.
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (are_twins(g, classes[a][0], classes[b][0])) throw std::logic_error("twin classes not maximal");
    }
  }
  return classes;
}

std::string to_string(ClassType t) {
  switch (t) {
    case ClassType::One: return "1";
    case ClassType::K: return "K";
    case ClassType::N: return "N";
  }
  return "?";
}

int TwinStructure::max_class_size() const {
  std::size_t best = 0;
  for (const auto& c : classes) best = std::max(best, c.size());
  return static_cast<int>(best);
}

std::vector<BlowUpPart> TwinStructure::blow_up_parts() const {
  std::vector<BlowUpPart> parts;
  parts.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    parts.push_back({static_cast<int>(classes[i].size()), types[i] != ClassType::N});
  }
  return parts;
}

TwinStructure twin_graph(const Graph& g) {
  TwinStructure t;
  t.classes = twin_classes(g);
  t.class_of.assign(g.order(), -1);
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    for (int v : t.classes[i]) t.class_of[v] = static_cast<int>(i);
  }
  for (const auto& cls : t.classes) {
    if (cls.size() == 1) {
      t.types.push_back(ClassType::One);
    } else {
      t.types.push_back(g.adjacent(cls[0], cls[1]) ? ClassType::K : ClassType::N);
      ++t.alpha;
    }
  }
  const int m = static_cast<int>(t.classes.size());
  std::vector<VertexSet> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int v : set_members(g.neighbors(t.classes[i][0]))) {
      if (t.class_of[v] != i) rows[i] |= vertex_bit(t.class_of[v]);
    }
  }
  t.quotient = Graph(m, std::move(rows));
  return t;
}

// Rebuilds G in its original labelling.
Graph expand_twin_structure(const TwinStructure& t) {
  const int n = static_cast<int>(t.class_of.size());
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const int a = t.class_of[u];
      const int b = t.class_of[v];
      if (a == b ? t.types[a] == ClassType::K : t.quotient.adjacent(a, b)) rows[u] |= vertex_bit(v);
    }
  }
  return Graph(n, std::move(rows));
}

bool is_almost_asymmetric(const TwinStructure& t, const AutomorphismGroup& group) {
  for (std::size_t e = 0; e < group.size(); ++e) {
    const auto image = group.element(e);
    for (std::size_t v = 0; v < image.size(); ++v) {
      if (t.class_of[v] != t.class_of[image[v]]) return false;
    }
  }
  return true;
}

bool is_almost_asymmetric(const Graph& g) {
  return is_almost_asymmetric(twin_graph(g), automorphism_group(g));
}

Graph core_graph(const Graph& g) { return is_connected(g) ? g : complement(g); }

}  // namespace symdist
