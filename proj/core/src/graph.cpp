#include "racforge/graph.hpp"

#include <algorithm>

#include "racforge/errors.hpp"

namespace racforge {

void Graph::add_vertex(const VertexId& id) {
  if (id.empty()) throw InvalidParameter("empty vertex id");
  if (index_.count(id)) throw InvalidParameter("duplicate vertex id: " + id);
  index_[id] = vertices_.size();
  vertices_.push_back(id);
  adjacency_[id];
}

void Graph::add_edge(const VertexId& a, const VertexId& b) {
  if (a == b) throw InvalidParameter("self-loop at " + a);
  if (!has_vertex(a)) throw InvalidParameter("edge endpoint not a vertex: " + a);
  if (!has_vertex(b)) throw InvalidParameter("edge endpoint not a vertex: " + b);
  EdgeKey key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it != edges_.end() && *it == key) throw InvalidParameter("duplicate edge " + key.str());
  edges_.insert(it, key);
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  EdgeKey key(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::vector<VertexId> Graph::neighbors(const VertexId& id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw InvalidParameter("unknown vertex: " + id);
  auto out = it->second;
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::degree(const VertexId& id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw InvalidParameter("unknown vertex: " + id);
  return it->second.size();
}

const std::vector<VertexId>& LabeledGraph::role(const std::string& name) const {
  auto it = roles.find(name);
  if (it == roles.end()) throw InvalidParameter("missing role: " + name);
  return it->second;
}

void LabeledGraph::validate_roles() const {
  for (const auto& [name, ids] : roles) {
    for (const auto& id : ids) {
      if (!graph.has_vertex(id)) {
        throw InvalidParameter("role " + name + " names unknown vertex " + id);
      }
    }
  }
}

const Point& Drawing::at(const VertexId& id) const {
  auto it = positions.find(id);
  if (it == positions.end()) throw InvalidParameter("vertex without position: " + id);
  return it->second;
}

void Drawing::validate() const {
  std::vector<const Point*> pts;
  pts.reserve(graph.vertex_count());
  for (const auto& v : graph.vertices()) pts.push_back(&at(v));
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (pts[i]->x != pts[j]->x) return pts[i]->x < pts[j]->x;
    return pts[i]->y < pts[j]->y;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (*pts[order[k - 1]] == *pts[order[k]]) {
      throw InvalidParameter("coincident vertex positions: " +
                             graph.vertices()[order[k - 1]] + " and " +
                             graph.vertices()[order[k]]);
    }
  }
}

}  // namespace racforge
