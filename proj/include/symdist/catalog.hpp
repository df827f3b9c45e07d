#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symdist/family.hpp"
#include "symdist/graph.hpp"
#include "symdist/iso.hpp"
#include "symdist/twins.hpp"

namespace symdist {

/// Characterisation lists by distinguishing number:
///   Dn  : D(G) = n     (2 entries)
///   Dn1 : D(G) = n - 1 (4 entries)
///   Dn2 : D(G) = n - 2 (14 entries, n >= 4)
///   Dn3 : D(G) = n - 3 (42 entries, n >= 5, graphs in family F only)
enum class TheoremId { Dn, Dn1, Dn2, Dn3 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::Dn, TheoremId::Dn1, TheoremId::Dn2,
                                             TheoremId::Dn3};

std::string to_string(TheoremId id);
/// Accepts "Dn", "Dn1", "Dn2", "Dn3" (case-insensitive); ParseError otherwise.
TheoremId parse_theorem_id(std::string_view text);

/// n - D(G) for members of the list.
int theorem_deficit(TheoremId id);
/// Smallest order the list is stated for.
int theorem_min_order(TheoremId id);
inline bool theorem_applies(TheoremId id, int n) { return n >= theorem_min_order(id); }

struct CatalogEntry {
  int index;                  // 1-based list position
  std::string_view notation;  // Kbar_t is the edgeless graph on t vertices
  int min_param;              // 0: entry has no parameter t
  FamilySpec (*build)(int t);

  bool parametric() const { return min_param > 0; }
};

std::span<const CatalogEntry> catalog_entries(TheoremId id);

struct FamilyAlias {
  TheoremId theorem;
  int entry;
  std::optional<int> param;

  bool operator==(const FamilyAlias&) const = default;
};

struct CatalogGraph {
  Graph graph;
  CanonicalForm form;
  std::vector<FamilyAlias> aliases;  // every (entry, t) producing this graph
  std::vector<std::string> expressions;
};

/// Every entry instance of order exactly n, parameters ranging over
/// [min_param, n]. Deduplicated by canonical form (sorted by it); empty when
/// the list does not apply at order n.
std::vector<CatalogGraph> instantiate_families(TheoremId id, int n);

/// Memoised instantiate_families, safe for concurrent callers.
std::shared_ptr<const std::vector<CatalogGraph>> cached_families(TheoremId id, int n);

/// False exactly when dim(G_c) = n - 4, diam(G_c) in {2,3} and
/// 5 <= |V(G_c*)| <= 9, with G_c = core_graph(G).
bool in_family_F(const Graph& g);

struct ClassificationReport {
  std::string graph6;
  int order = 0;
  int edges = 0;
  bool connected = false;
  std::optional<int> dim;  // metric dimension of G, connected graphs only
  std::vector<int> resolving_witness;
  int distinguishing = 0;
  std::vector<int> distinguishing_witness;
  std::size_t automorphisms = 0;
  std::optional<int> diameter;  // of G when connected
  int core_diameter = 0;
  int core_dim = 0;
  int core_twin_order = 0;  // |V(G_c*)|
  TwinStructure twins;      // of G
  bool almost_asymmetric = false;
  bool in_family_F = true;
  std::vector<FamilyAlias> matches;
};

/// Bounded by kMaxAutomorphismOrder; family matching by canonical form
/// against every applicable list at the graph's order.
ClassificationReport classify_graph(const Graph& g);

}  // namespace symdist
