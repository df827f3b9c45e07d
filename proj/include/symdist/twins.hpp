#pragma once

#include <string>
#include <vector>

#include "symdist/graph.hpp"

namespace symdist {

class AutomorphismGroup;

/// N(u) \ {v} == N(v) \ {u}. Covers open twins (non-adjacent, equal open
/// neighbourhoods) and closed twins (adjacent, equal closed neighbourhoods).
bool are_twins(const Graph& g, int u, int v);

/// Maximal twin classes, each sorted, ordered by smallest member. Throws
/// std::logic_error if the computed relation is not transitive.
std::vector<std::vector<int>> twin_classes(const Graph& g);

enum class ClassType { One, K, N };

std::string to_string(ClassType t);

struct TwinStructure {
  std::vector<std::vector<int>> classes;
  std::vector<ClassType> types;
  std::vector<int> class_of;  // vertex -> class index
  Graph quotient;             // G*: class i adjacent to class j iff cross pairs are
  int alpha = 0;              // classes of type K or N

  int max_class_size() const;
  std::vector<BlowUpPart> blow_up_parts() const;
};

TwinStructure twin_graph(const Graph& g);

/// Inverse of twin_graph up to relabeling: blow_up(quotient, class parts).
Graph expand_twin_structure(const TwinStructure& t);

/// True iff every automorphism maps each twin class onto itself.
bool is_almost_asymmetric(const Graph& g);
bool is_almost_asymmetric(const TwinStructure& t, const AutomorphismGroup& group);

/// G when connected, its complement otherwise.
Graph core_graph(const Graph& g);

}  // namespace symdist
