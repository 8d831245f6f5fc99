#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "racforge/geometry.hpp"

namespace racforge {

using VertexId = std::string;

/// Unordered vertex pair, stored with first <= second.
struct EdgeKey {
  VertexId u;
  VertexId v;
  EdgeKey() = default;
  EdgeKey(VertexId a, VertexId b) {
    if (a <= b) {
      u = std::move(a);
      v = std::move(b);
    } else {
      u = std::move(b);
      v = std::move(a);
    }
  }
  friend bool operator==(const EdgeKey& a, const EdgeKey& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const EdgeKey& a, const EdgeKey& b) { return !(a == b); }
  friend bool operator<(const EdgeKey& a, const EdgeKey& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
  bool incident(const VertexId& w) const { return u == w || v == w; }
  bool shares_endpoint(const EdgeKey& o) const {
    return incident(o.u) || incident(o.v);
  }
  std::string str() const { return u + "-" + v; }
};

/// Simple undirected graph. Vertices keep insertion order; edges are kept
/// sorted and unique.
class Graph {
 public:
  void add_vertex(const VertexId& id);
  void add_edge(const VertexId& a, const VertexId& b);
  bool has_vertex(const VertexId& id) const { return index_.count(id) > 0; }
  bool has_edge(const VertexId& a, const VertexId& b) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeKey>& edges() const { return edges_; }

  std::vector<VertexId> neighbors(const VertexId& id) const;
  std::size_t degree(const VertexId& id) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeKey> edges_;  // sorted, unique
  std::unordered_map<VertexId, std::size_t> index_;
  std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
};

using RoleMap = std::map<std::string, std::vector<VertexId>>;

/// Graph plus named vertex roles attached by generators and the compiler.
struct LabeledGraph {
  Graph graph;
  RoleMap roles;

  void set_role(const std::string& name, const VertexId& id) { roles[name] = {id}; }
  void set_role(const std::string& name, std::vector<VertexId> ids) {
    roles[name] = std::move(ids);
  }
  const std::vector<VertexId>& role(const std::string& name) const;
  bool has_role(const std::string& name) const { return roles.count(name) > 0; }
  /// Throws InvalidParameter if any role names a vertex missing from the graph.
  void validate_roles() const;
};

/// Total vertex->point map with pairwise distinct positions.
struct Drawing {
  Graph graph;
  std::unordered_map<VertexId, Point> positions;

  const Point& at(const VertexId& id) const;
  Segment segment(const EdgeKey& e) const { return Segment(at(e.u), at(e.v)); }
  /// Throws InvalidParameter on missing or coincident positions.
  void validate() const;
};

}  // namespace racforge
