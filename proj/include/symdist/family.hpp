#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symdist/graph.hpp"

namespace symdist {

enum class FamilyKind {
  Path,                  // params: {n}
  Cycle,                 // params: {n}
  Complete,              // params: {n}
  Empty,                 // params: {n}
  CompleteBipartite,     // params: {s, t}
  CompleteMultipartite,  // params: part sizes
  BroomTree,             // params: {k}
  HouseC5Prime,          // no params
  Complement,            // operands: {G}
  Union,                 // operands: two or more
  Join,                  // operands: two or more
  BlowUp,                // operands: {base}; parts
};

/// Expression tree naming a graph. Leaves are parametric families, inner
/// nodes are graph operations.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  std::vector<int> params;
  std::vector<FamilySpec> operands;
  std::vector<BlowUpPart> parts;

  static FamilySpec path(int n) { return {FamilyKind::Path, {n}, {}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}, {}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}, {}, {}}; }
  static FamilySpec empty(int n) { return {FamilyKind::Empty, {n}, {}, {}}; }
  static FamilySpec bipartite(int s, int t) { return {FamilyKind::CompleteBipartite, {s, t}, {}, {}}; }
  static FamilySpec multipartite(std::vector<int> sizes) {
    return {FamilyKind::CompleteMultipartite, std::move(sizes), {}, {}};
  }
  static FamilySpec broom(int k) { return {FamilyKind::BroomTree, {k}, {}, {}}; }
  static FamilySpec house() { return {FamilyKind::HouseC5Prime, {}, {}, {}}; }
  static FamilySpec complement_of(FamilySpec g) { return {FamilyKind::Complement, {}, {std::move(g)}, {}}; }
  static FamilySpec union_of(std::vector<FamilySpec> parts) { return {FamilyKind::Union, {}, std::move(parts), {}}; }
  static FamilySpec join_of(std::vector<FamilySpec> parts) { return {FamilyKind::Join, {}, std::move(parts), {}}; }
  /// m disjoint copies of g (g itself when m == 1).
  static FamilySpec copies(int m, const FamilySpec& g);
  static FamilySpec blow_up_of(FamilySpec base, std::vector<BlowUpPart> parts) {
    return {FamilyKind::BlowUp, {}, {std::move(base)}, std::move(parts)};
  }

  bool operator==(const FamilySpec&) const = default;
};

/// Throws InvalidGraph when a parameter violates its family's side
/// condition (e.g. BroomTree with k < 3, Cycle with n < 3).
Graph construct_family(const FamilySpec& spec);

/// Renders the spec in the expression language accepted by
/// parse_family_expression.
std::string to_expression(const FamilySpec& spec);

/// Expression language (whitespace ignored):
///
///   expr  := [count '*'] atom          count copies, disjoint
///   atom  := 'K' int | 'K(' int ')'    complete graph
///          | 'K(' int (',' int)+ ')'   complete multipartite
///          | 'E' int | 'E(' int ')'    edgeless graph
///          | 'P' int | 'C' int         path, cycle
///          | "C5'" | 'H'               5-cycle plus one chord
///          | 'T' int | 'T(' int ')'    broom tree
///          | 'co(' expr ')'            complement
///          | 'U(' expr (',' expr)+ ')' disjoint union
///          | 'J(' expr (',' expr)+ ')' join
///          | 'B(' expr ';' part (',' part)* ')'  blow-up, part := K int | E int
///
/// Example: "J(K1,U(K1,2*K2))" is K_1 + (K_1 u 2K_2). Throws ParseError.
FamilySpec parse_family_expression(std::string_view text);

}  // namespace symdist
