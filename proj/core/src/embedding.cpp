#include "racforge/embedding.hpp"

#include <algorithm>

#include "racforge/errors.hpp"

namespace racforge {

NodeKey vertex_node(const VertexId& v) { return "v:" + v; }

NodeKey dummy_node(const EdgeKey& e1, const EdgeKey& e2) {
  if (e2 < e1) return "x:" + e2.str() + "&" + e1.str();
  return "x:" + e1.str() + "&" + e2.str();
}

namespace {

struct Direction {
  Rational dx, dy;
};

// 0 for angles in [0, pi) measured from +x, 1 for [pi, 2pi).
int half_plane(const Direction& d) {
  if (d.dy.sign() != 0) return d.dy.sign() > 0 ? 0 : 1;
  return d.dx.sign() > 0 ? 0 : 1;
}

bool angle_less(const Direction& a, const Direction& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  const Rational cross = a.dx * b.dy - a.dy * b.dx;
  return cross.sign() > 0;
}

struct Stop {
  Rational t;
  NodeKey node;
};

Rational param_along(const Point& u, const Point& v, const Point& p) {
  if (u.x != v.x) return (p.x - u.x) / (v.x - u.x);
  return (p.y - u.y) / (v.y - u.y);
}

}  // namespace

PlanarizedEmbedding build_embedding(const Drawing& d, const std::vector<Crossing>& crossings) {
  PlanarizedEmbedding emb;
  emb.original_vertices = d.graph.vertices();

  std::map<EdgeKey, std::vector<Stop>> stops;
  for (const auto& e : d.graph.edges()) stops[e];
  for (const auto& c : crossings) {
    const NodeKey dn = dummy_node(c.e1, c.e2);
    emb.dummy_meta[dn] = {c.e1, c.e2};
    stops[c.e1].push_back({param_along(d.at(c.e1.u), d.at(c.e1.v), c.point), dn});
    stops[c.e2].push_back({param_along(d.at(c.e2.u), d.at(c.e2.v), c.point), dn});
  }

  // Incident darts with exact outgoing directions, per planarization node.
  std::map<NodeKey, std::vector<std::pair<Direction, Dart>>> incid;
  for (auto& [e, list] : stops) {
    std::sort(list.begin(), list.end(), [](const Stop& a, const Stop& b) { return a.t < b.t; });
    const Point& pu = d.at(e.u);
    const Point& pv = d.at(e.v);
    const Direction fwd{pv.x - pu.x, pv.y - pu.y};
    const Direction bwd{pu.x - pv.x, pu.y - pv.y};
    std::vector<NodeKey> chain;
    chain.push_back(vertex_node(e.u));
    for (const auto& s : list) chain.push_back(s.node);
    chain.push_back(vertex_node(e.v));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      incid[chain[i]].push_back({fwd, Dart{e, chain[i + 1]}});
      incid[chain[i + 1]].push_back({bwd, Dart{e, chain[i]}});
    }
  }

  for (const auto& v : d.graph.vertices()) incid[vertex_node(v)];
  for (auto& [node, darts] : incid) {
    std::sort(darts.begin(), darts.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    auto& rot = emb.rotation[node];
    rot.reserve(darts.size());
    for (auto& [dir, dart] : darts) {
      (void)dir;
      rot.push_back(dart);
    }
  }
  return emb;
}

PlanarizedEmbedding extract_embedding(const Drawing& d) {
  return build_embedding(d, enumerate_crossings(d));
}

namespace {

std::vector<std::string> labels_of(const std::vector<Dart>& darts) {
  std::vector<std::string> out;
  out.reserve(darts.size());
  for (const auto& dt : darts) out.push_back(dt.label());
  return out;
}

// Lexicographically least rotation of a cyclic label sequence.
std::vector<std::string> canonical_rotation(std::vector<std::string> seq) {
  if (seq.size() <= 1) return seq;
  std::vector<std::string> best = seq;
  for (std::size_t shift = 1; shift < seq.size(); ++shift) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

bool rotations_match(const PlanarizedEmbedding& e1, const PlanarizedEmbedding& e2, bool reversed) {
  for (const auto& [node, darts1] : e1.rotation) {
    auto it = e2.rotation.find(node);
    if (it == e2.rotation.end()) return false;
    auto l1 = labels_of(darts1);
    auto l2 = labels_of(it->second);
    if (reversed) std::reverse(l2.begin(), l2.end());
    if (!cyclic_equal(l1, l2)) return false;
  }
  return true;
}

}  // namespace

EmbeddingRelation embedding_relation(const PlanarizedEmbedding& e1,
                                     const PlanarizedEmbedding& e2) {
  auto v1 = e1.original_vertices;
  auto v2 = e2.original_vertices;
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  if (v1 != v2) throw GraphMismatch("embeddings are over different vertex sets");
  auto keys = [](const PlanarizedEmbedding& e) {
    std::vector<NodeKey> out;
    for (const auto& [k, v] : e.rotation) {
      (void)v;
      out.push_back(k);
    }
    return out;
  };
  if (keys(e1) != keys(e2)) return EmbeddingRelation::Distinct;
  if (rotations_match(e1, e2, false)) return EmbeddingRelation::Identical;
  if (rotations_match(e1, e2, true)) return EmbeddingRelation::Mirror;
  return EmbeddingRelation::Distinct;
}

std::string canonical_code(const PlanarizedEmbedding& e) {
  std::string out;
  for (const auto& [node, darts] : e.rotation) {
    out += node;
    out += "=";
    const auto canon = canonical_rotation(labels_of(darts));
    for (const auto& l : canon) {
      out += l;
      out += ",";
    }
    out += ";";
  }
  return out;
}

std::string canonical_class_code(const PlanarizedEmbedding& e) {
  PlanarizedEmbedding rev = e;
  for (auto& [node, darts] : rev.rotation) {
    (void)node;
    std::reverse(darts.begin(), darts.end());
  }
  const std::string a = canonical_code(e);
  const std::string b = canonical_code(rev);
  return a < b ? a : b;
}

}  // namespace racforge
