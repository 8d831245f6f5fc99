#pragma once

#include <array>
#include <optional>

#include "racforge/cnf.hpp"
#include "racforge/graph.hpp"

namespace racforge {

/// Structured index over the compiled graph's role map. Tower indices run
/// 0..n+1 with 0 and n+1 the dummy towers; variable i lives in tower i.
struct GadgetLabels {
  int num_variables = 0;
  int num_clauses = 0;
  RoleMap roles;

  VertexId variable_endpoint(int var, int clause) const;
  VertexId negated_endpoint(int var, int clause) const;
  std::array<VertexId, 2> connectors(int tower) const;
  /// Nominal endpoint names follow clause literal order: top, bottom, right.
  std::array<VertexId, 3> clause_endpoints(int clause) const;
  std::array<VertexId, 4> clause_trap(int clause) const;
  VertexId path_mid(int clause, int literal_slot) const;
  std::vector<VertexId> corridor_boundary(int var, int gap, char side) const;  // side 'A'|'B'
  const std::vector<VertexId>& tower_vertices(int var) const;
  const std::vector<VertexId>& dummy_tower(int which) const;  // 0 = left, 1 = right
  const std::vector<VertexId>& skeleton_part(bool horizontal) const;

  static GadgetLabels from_roles(RoleMap roles);
};

struct CompileResult {
  LabeledGraph graph;
  GadgetLabels labels;
};

/// Builds G_phi for a 3-SAT formula: one endpoint tower per variable (a chain
/// of augmented square antiprisms with m endpoint slots and m-1 corridors per
/// side), two flanking dummy towers joined by connector lines, the horizontal
/// and vertical skeleton parts locked by one perpendicular long-edge pair,
/// and one valve gadget per clause whose endpoints reach their variable
/// endpoints by paths of length two. Deterministic; size linear in n*m.
CompileResult compile(const CnfFormula& f);

/// Exact integer-coordinate drawing of compile(f) realizing assignment a:
/// towers stand upright above the horizontal part, negated endpoints of
/// variable i are drawn left iff a[i] is true, each clause's chosen true
/// literal stays trapped between its valve's parallel edges with its path
/// crossing exactly one of them perpendicularly, and the remaining clause
/// paths cross the vertical-part rails and thread tower corridors.
/// Throws UnsatAssignment when a does not satisfy f.
Drawing synthesize_drawing(const CnfFormula& f, const Assignment& a);

/// Reads a truth assignment off a drawing: variable i is true iff its negated
/// endpoints lie strictly left of the directed axis through the tower's two
/// connectors. Throws InconsistentGeometry when endpoints straddle the axis
/// or lie on it.
Assignment extract_assignment(const Drawing& d, const GadgetLabels& labels);

}  // namespace racforge
