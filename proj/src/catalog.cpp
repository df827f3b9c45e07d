#include "symdist/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "symdist/errors.hpp"
#include "symdist/graph6.hpp"
#include "symdist/metric_dimension.hpp"
#include "symdist/symmetry.hpp"

namespace symdist {

namespace {

using F = FamilySpec;

F K(int n) { return F::complete(n); }
F E(int n) { return F::empty(n); }
F Kst(int s, int t) { return F::bipartite(s, t); }
F U(F a, F b) { return F::union_of({std::move(a), std::move(b)}); }
F U(F a, F b, F c) { return F::union_of({std::move(a), std::move(b), std::move(c)}); }
F J(F a, F b) { return F::join_of({std::move(a), std::move(b)}); }
F P4Blow(BlowUpPart a, BlowUpPart b, BlowUpPart c, BlowUpPart d) {
  return F::blow_up_of(F::path(4), {a, b, c, d});
}
constexpr BlowUpPart kOne{1, true};
BlowUpPart Kp(int t) { return {t, true}; }
BlowUpPart Ep(int t) { return {t, false}; }

// clang-format off
const CatalogEntry kDn[] = {
  {1, "K_n",    1, [](int t) { return K(t); }},
  {2, "Kbar_n", 1, [](int t) { return E(t); }},
};

const CatalogEntry kDn1[] = {
  {1, "C_4",         0, [](int) { return F::cycle(4); }},
  {2, "K_{t,1}",     2, [](int t) { return Kst(t, 1); }},
  {3, "2K_2",        0, [](int) { return F::copies(2, K(2)); }},
  {4, "K_t u K_1",   2, [](int t) { return U(K(t), K(1)); }},
};

const CatalogEntry kDn2[] = {
  {1,  "C_5",               0, [](int) { return F::cycle(5); }},
  {2,  "P_4",               0, [](int) { return F::path(4); }},
  {3,  "K_{1,2,2}",         0, [](int) { return F::multipartite({1, 2, 2}); }},
  {4,  "2K_2 u K_1",        0, [](int) { return U(K(2), K(2), K(1)); }},
  {5,  "K_{3,3}",           0, [](int) { return Kst(3, 3); }},
  {6,  "2K_3",              0, [](int) { return F::copies(2, K(3)); }},
  {7,  "K_{t,2}",           3, [](int t) { return Kst(t, 2); }},
  {8,  "K_t u K_2",         3, [](int t) { return U(K(t), K(2)); }},
  {9,  "K_2 + Kbar_t",      2, [](int t) { return J(K(2), E(t)); }},
  {10, "K_t u 2K_1",        2, [](int t) { return U(K(t), K(1), K(1)); }},
  {11, "K_t + Kbar_2",      2, [](int t) { return J(K(t), E(2)); }},
  {12, "Kbar_t u K_2",      2, [](int t) { return U(E(t), K(2)); }},
  {13, "K_1 + (K_t u K_1)", 2, [](int t) { return J(K(1), U(K(t), K(1))); }},
  {14, "K_{t,1} u K_1",     2, [](int t) { return U(Kst(t, 1), K(1)); }},
};

const CatalogEntry kDn3[] = {
  {1,  "P_5",                         0, [](int) { return F::path(5); }},
  {2,  "C_5'",                        0, [](int) { return F::house(); }},
  {3,  "K_{4,4}",                     0, [](int) { return Kst(4, 4); }},
  {4,  "2K_4",                        0, [](int) { return F::copies(2, K(4)); }},
  {5,  "K_3 + Kbar_t",                3, [](int t) { return J(K(3), E(t)); }},
  {6,  "Kbar_3 u K_t",                3, [](int t) { return U(E(3), K(t)); }},
  {7,  "K_2 + (K_t u K_1)",           2, [](int t) { return J(K(2), U(K(t), K(1))); }},
  {8,  "Kbar_2 u K_{t,1}",            2, [](int t) { return U(E(2), Kst(t, 1)); }},
  {9,  "K_{t,3}",                     4, [](int t) { return Kst(t, 3); }},
  {10, "K_t u K_3",                   4, [](int t) { return U(K(t), K(3)); }},
  {11, "K_t + Kbar_3",                3, [](int t) { return J(K(t), E(3)); }},
  {12, "Kbar_t u K_3",                3, [](int t) { return U(E(t), K(3)); }},
  {13, "K_t + (K_2 u K_1)",           2, [](int t) { return J(K(t), U(K(2), K(1))); }},
  {14, "Kbar_t u K_{2,1}",            2, [](int t) { return U(E(t), Kst(2, 1)); }},
  {15, "K_{1,2,t}",                   3, [](int t) { return F::multipartite({1, 2, t}); }},
  {16, "K_1 u K_2 u K_t",             3, [](int t) { return U(K(1), K(2), K(t)); }},
  {17, "K_2 + K_{2,2}",               0, [](int) { return J(K(2), Kst(2, 2)); }},
  {18, "Kbar_2 u 2K_2",               0, [](int) { return U(E(2), K(2), K(2)); }},
  {19, "K_{1,3,3}",                   0, [](int) { return F::multipartite({1, 3, 3}); }},
  {20, "2K_3 u K_1",                  0, [](int) { return U(K(3), K(3), K(1)); }},
  {21, "K_{2,2,2}",                   0, [](int) { return F::multipartite({2, 2, 2}); }},
  {22, "3K_2",                        0, [](int) { return F::copies(3, K(2)); }},
  {23, "Kbar_2 + (K_1 u K_t)",        2, [](int t) { return J(E(2), U(K(1), K(t))); }},
  {24, "K_2 u K_{t,1}",               2, [](int t) { return U(K(2), Kst(t, 1)); }},
  {25, "Kbar_2 + 2K_2",               0, [](int) { return J(E(2), F::copies(2, K(2))); }},
  {26, "K_2 u K_{2,2}",               0, [](int) { return U(K(2), Kst(2, 2)); }},
  {27, "Kbar_t + (K_1 u K_2)",        2, [](int t) { return J(E(t), U(K(1), K(2))); }},
  {28, "K_t u K_{2,1}",               2, [](int t) { return U(K(t), Kst(2, 1)); }},
  {29, "K_2 + 2K_2",                  0, [](int) { return J(K(2), F::copies(2, K(2))); }},
  {30, "2K_1 u K_{2,2}",              0, [](int) { return U(K(1), K(1), Kst(2, 2)); }},
  {31, "K_1 + (K_1 u K_{1,t})",       2, [](int t) { return J(K(1), U(K(1), Kst(1, t))); }},
  {32, "K_1 u (K_1 + (K_t u K_1))",   2, [](int t) { return U(K(1), J(K(1), U(K(t), K(1)))); }},
  {33, "K_1 + P_4",                   0, [](int) { return J(K(1), F::path(4)); }},
  {34, "K_1 u P_4",                   0, [](int) { return U(K(1), F::path(4)); }},
  {35, "K_1 + (K_1 u 2K_2)",          0, [](int) { return J(K(1), U(K(1), K(2), K(2))); }},
  {36, "K_1 u (K_1 + K_{2,2})",       0, [](int) { return U(K(1), J(K(1), Kst(2, 2))); }},
  {37, "K_1 + (K_1 u K_{2,2})",       0, [](int) { return J(K(1), U(K(1), Kst(2, 2))); }},
  {38, "K_1 u (K_1 + 2K_2)",          0, [](int) { return U(K(1), J(K(1), F::copies(2, K(2)))); }},
  {39, "P_4[K_1, K_t, K_1, K_1]",     2, [](int t) { return P4Blow(kOne, Kp(t), kOne, kOne); }},
  {40, "P_4[Kbar_t, K_1, K_1, K_1]",  2, [](int t) { return P4Blow(Ep(t), kOne, kOne, kOne); }},
  {41, "P_4[K_1, Kbar_t, K_1, K_1]",  2, [](int t) { return P4Blow(kOne, Ep(t), kOne, kOne); }},
  {42, "P_4[K_t, K_1, K_1, K_1]",     2, [](int t) { return P4Blow(Kp(t), kOne, kOne, kOne); }},
};
// clang-format on

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Dn: return "Dn";
    case TheoremId::Dn1: return "Dn1";
    case TheoremId::Dn2: return "Dn2";
    case TheoremId::Dn3: return "Dn3";
  }
  return "?";
}

TheoremId parse_theorem_id(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (TheoremId id : kAllTheorems) {
    std::string name = to_string(id);
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == lower) return id;
  }
  throw ParseError("unknown theorem id \"" + std::string(text) + "\" (expected Dn, Dn1, Dn2 or Dn3)");
}

int theorem_deficit(TheoremId id) {
  switch (id) {
    case TheoremId::Dn: return 0;
    case TheoremId::Dn1: return 1;
    case TheoremId::Dn2: return 2;
    case TheoremId::Dn3: return 3;
  }
  return 0;
}

int theorem_min_order(TheoremId id) {
  switch (id) {
    case TheoremId::Dn:
    case TheoremId::Dn1: return 1;
    case TheoremId::Dn2: return 4;
    case TheoremId::Dn3: return 5;
  }
  return 1;
}

std::span<const CatalogEntry> catalog_entries(TheoremId id) {
  switch (id) {
    case TheoremId::Dn: return kDn;
    case TheoremId::Dn1: return kDn1;
    case TheoremId::Dn2: return kDn2;
    case TheoremId::Dn3: return kDn3;
  }
  return {};
}

std::vector<CatalogGraph> instantiate_families(TheoremId id, int n) {
  if (!theorem_applies(id, n)) return {};
  std::map<CanonicalForm, CatalogGraph> found;
  const auto add = [&](const CatalogEntry& entry, std::optional<int> t) {
    const FamilySpec spec = entry.build(t.value_or(0));
    const Graph g = construct_family(spec);
    if (g.order() != n) return;
    CanonicalForm form = canonical_form(g);
    auto [it, fresh] = found.try_emplace(form, CatalogGraph{g, form, {}, {}});
    it->second.aliases.push_back({id, entry.index, t});
    it->second.expressions.push_back(to_expression(spec));
  };
  for (const CatalogEntry& entry : catalog_entries(id)) {
    if (!entry.parametric()) {
      add(entry, std::nullopt);
      continue;
    }
    for (int t = entry.min_param; t <= n; ++t) add(entry, t);
  }
  std::vector<CatalogGraph> out;
  out.reserve(found.size());
  for (auto& [form, cg] : found) out.push_back(std::move(cg));
  return out;
}

std::shared_ptr<const std::vector<CatalogGraph>> cached_families(TheoremId id, int n) {
  static std::shared_mutex mutex;
  static std::map<std::pair<TheoremId, int>, std::shared_ptr<const std::vector<CatalogGraph>>> cache;
  const auto key = std::make_pair(id, n);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const std::vector<CatalogGraph>>(instantiate_families(id, n));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

bool in_family_F(const Graph& g) {
  const int n = g.order();
  if (n < 5) return true;
  const Graph core = core_graph(g);
  const int core_diam = diameter(core);
  if (core_diam != 2 && core_diam != 3) return true;
  const int twin_order = twin_graph(core).quotient.order();
  if (twin_order < 5 || twin_order > 9) return true;
  return metric_dimension(core).dim != n - 4;
}

ClassificationReport classify_graph(const Graph& g) {
  ClassificationReport r;
  r.graph6 = write_graph6(g);
  r.order = g.order();
  r.edges = g.edge_count();
  r.connected = is_connected(g);
  if (r.order == 0) return r;

  if (r.connected) {
    const ResolvingWitness w = metric_dimension(g);
    r.dim = w.dim;
    r.resolving_witness = w.witness;
    r.diameter = diameter(g);
  }
  const AutomorphismGroup group = automorphism_group(g);
  r.automorphisms = group.size();
  const DistinguishingResult d = distinguishing_coloring(g, group);
  r.distinguishing = d.number;
  r.distinguishing_witness.assign(d.witness.values().begin(), d.witness.values().end());

  const Graph core = core_graph(g);
  r.core_diameter = diameter(core);
  r.core_dim = metric_dimension(core).dim;
  r.core_twin_order = twin_graph(core).quotient.order();
  r.in_family_F = !(r.core_dim == r.order - 4 && (r.core_diameter == 2 || r.core_diameter == 3) &&
                    r.core_twin_order >= 5 && r.core_twin_order <= 9);

  r.twins = twin_graph(g);
  r.almost_asymmetric = is_almost_asymmetric(r.twins, group);

  if (r.order <= kMaxCanonicalOrder) {
    const CanonicalForm form = canonical_form(g);
    for (TheoremId id : kAllTheorems) {
      const auto instances = cached_families(id, r.order);
      const auto it = std::lower_bound(instances->begin(), instances->end(), form,
                                       [](const CatalogGraph& cg, const CanonicalForm& f) { return cg.form < f; });
      if (it != instances->end() && it->form == form) {
        r.matches.insert(r.matches.end(), it->aliases.begin(), it->aliases.end());
      }
    }
  }
  return r;
}

}  // namespace symdist
