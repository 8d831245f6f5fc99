#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "racforge/checker.hpp"

namespace racforge {

/// Planarization node: an original vertex ("v:<id>") or a crossing dummy
/// ("x:<e1>&<e2>", edges in sorted order).
using NodeKey = std::string;

NodeKey vertex_node(const VertexId& v);
NodeKey dummy_node(const EdgeKey& e1, const EdgeKey& e2);

/// One outgoing edge fragment at a node: the original edge it belongs to and
/// the planarization node it leads to.
struct Dart {
  EdgeKey edge;
  NodeKey to;
  std::string label() const { return edge.str() + ">" + to; }
  friend bool operator==(const Dart& a, const Dart& b) { return a.edge == b.edge && a.to == b.to; }
};

/// Rotation system of the drawing's planarization: counterclockwise cyclic
/// dart order around every vertex and every crossing dummy.
struct PlanarizedEmbedding {
  std::map<NodeKey, std::vector<Dart>> rotation;
  std::map<NodeKey, std::pair<EdgeKey, EdgeKey>> dummy_meta;
  std::vector<VertexId> original_vertices;

  std::size_t node_count() const { return rotation.size(); }
};

/// Planarizes the drawing (one degree-4 dummy per crossing) and reads off the
/// exact counterclockwise rotation at every node. Angle comparisons use cross
/// products only. Throws DegenerateDrawing on degenerate input.
PlanarizedEmbedding extract_embedding(const Drawing& d);

/// Same extraction from precomputed crossings (shared by the tolerance path).
PlanarizedEmbedding build_embedding(const Drawing& d, const std::vector<Crossing>& crossings);

enum class EmbeddingRelation { Identical, Mirror, Distinct };

/// Compares labeled rotation systems; dummies are matched by their crossing
/// edge pairs. Mirror means equal after reversing every cyclic order.
/// Throws GraphMismatch when the original vertex sets differ.
EmbeddingRelation embedding_relation(const PlanarizedEmbedding& e1, const PlanarizedEmbedding& e2);

/// Deterministic serialization with each cyclic order rotated to its
/// lexicographically least phase.
std::string canonical_code(const PlanarizedEmbedding& e);

/// Mirror-merged class key: min(code, code of reversed rotations).
std::string canonical_class_code(const PlanarizedEmbedding& e);

}  // namespace racforge
