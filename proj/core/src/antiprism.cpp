#include "racforge/antiprism.hpp"

#include <algorithm>

#include "racforge/errors.hpp"

namespace racforge {

LabeledGraph augmented_antiprism(int k) {
  if (k < 3) throw InvalidParameter("augmented antiprism requires k >= 3");
  LabeledGraph out;
  Graph& g = out.graph;
  g.add_vertex("c");
  std::vector<VertexId> outer, inner;
  for (int t = 0; t < k; ++t) {
    outer.push_back("o" + std::to_string(t));
    g.add_vertex(outer.back());
  }
  for (int t = 0; t < k; ++t) {
    inner.push_back("i" + std::to_string(t));
    g.add_vertex(inner.back());
  }
  for (int t = 0; t < k; ++t) {
    g.add_edge(outer[t], outer[(t + 1) % k]);
    g.add_edge(inner[t], inner[(t + 1) % k]);
    g.add_edge("c", outer[t]);
    g.add_edge("c", inner[t]);
    // Each inner vertex sees two consecutive outer vertices.
    g.add_edge(inner[t], outer[t]);
    g.add_edge(inner[t], outer[(t + k - 1) % k]);
  }
  out.set_role("central", VertexId("c"));
  out.set_role("outer-quad", outer);
  out.set_role("inner-quad", inner);
  out.set_role("external-attach", {outer[0], outer[k - 1]});
  out.set_role("internal-attach", inner[0]);
  return out;
}

namespace {

struct AttachInfo {
  VertexId ext0, ext1, internal;
};

AttachInfo attach_info(const LabeledGraph& g, const char* which) {
  if (!g.has_role("external-attach") || !g.has_role("internal-attach")) {
    throw InvalidAttachment(std::string(which) + ": attach roles missing");
  }
  const auto& ext = g.role("external-attach");
  const auto& in = g.role("internal-attach");
  if (ext.size() != 2 || in.size() != 1) {
    throw InvalidAttachment(std::string(which) + ": malformed attach roles");
  }
  if (!g.graph.has_edge(ext[0], ext[1])) {
    throw InvalidAttachment(std::string(which) + ": external pair " + ext[0] + "," + ext[1] +
                            " is not adjacent");
  }
  if (!g.graph.has_edge(in[0], ext[0]) || !g.graph.has_edge(in[0], ext[1])) {
    throw InvalidAttachment(std::string(which) + ": internal-attach not adjacent to the pair");
  }
  return {ext[0], ext[1], in[0]};
}

// Smallest suffix index whose renaming collides with nothing in base.
int fresh_suffix(const Graph& base, const Graph& piece) {
  for (int k = 2;; ++k) {
    const std::string suffix = "_" + std::to_string(k);
    bool clash = false;
    for (const auto& v : piece.vertices()) {
      if (base.has_vertex(v + suffix)) {
        clash = true;
        break;
      }
    }
    if (!clash) return k;
  }
}

}  // namespace

LabeledGraph extend(const LabeledGraph& g, const LabeledGraph& h, ExtendMode mode) {
  const AttachInfo ga = attach_info(g, "g");
  const AttachInfo ha = attach_info(h, "h");
  if (!h.has_role("outer-quad") || !h.has_role("inner-quad")) {
    throw InvalidAttachment("h: ring roles missing, cannot derive the far side");
  }
  const auto& houter = h.role("outer-quad");
  const int k = static_cast<int>(houter.size());
  auto pos_of = [&](const VertexId& v) {
    auto it = std::find(houter.begin(), houter.end(), v);
    if (it == houter.end()) throw InvalidAttachment("h: attach pair not on the outer ring");
    return static_cast<int>(it - houter.begin());
  };
  // Attach edge spans ring positions (p, p+1).
  int p0 = pos_of(ha.ext0), p1 = pos_of(ha.ext1);
  if ((p0 + 1) % k != p1 && (p1 + 1) % k != p0) {
    throw InvalidAttachment("h: external pair not consecutive on the outer ring");
  }
  const int p = ((p0 + 1) % k == p1) ? p0 : p1;
  const int shift = (mode == ExtendMode::Horizontal) ? k / 2 : 1;
  const VertexId far0 = houter[(p + shift) % k];
  const VertexId far1 = houter[(p + shift + 1) % k];
  VertexId far_internal;
  for (const auto& iv : h.role("inner-quad")) {
    if (h.graph.has_edge(iv, far0) && h.graph.has_edge(iv, far1)) {
      far_internal = iv;
      break;
    }
  }
  if (far_internal.empty()) throw InvalidAttachment("h: far side has no shared inner neighbor");

  const int suffix_idx = fresh_suffix(g.graph, h.graph);
  const std::string suffix = "_" + std::to_string(suffix_idx);
  auto mapped = [&](const VertexId& v) -> VertexId {
    if (v == ha.ext0) return ga.ext0;
    if (v == ha.ext1) return ga.ext1;
    return v + suffix;
  };

  LabeledGraph out;
  for (const auto& v : g.graph.vertices()) out.graph.add_vertex(v);
  for (const auto& v : h.graph.vertices()) {
    if (v == ha.ext0 || v == ha.ext1) continue;
    out.graph.add_vertex(mapped(v));
  }
  for (const auto& e : g.graph.edges()) out.graph.add_edge(e.u, e.v);
  for (const auto& e : h.graph.edges()) {
    const VertexId a = mapped(e.u), b = mapped(e.v);
    if (out.graph.has_edge(a, b)) continue;  // the identified ring edge
    out.graph.add_edge(a, b);
  }
  out.graph.add_edge(ga.internal, mapped(ha.internal));

  std::vector<VertexId> centrals;
  if (g.has_role("central")) centrals = g.role("central");
  if (h.has_role("central")) {
    for (const auto& c : h.role("central")) centrals.push_back(mapped(c));
  }
  if (!centrals.empty()) out.set_role("central", centrals);
  std::vector<VertexId> houter_m, hinner_m;
  for (const auto& v : houter) houter_m.push_back(mapped(v));
  for (const auto& v : h.role("inner-quad")) hinner_m.push_back(mapped(v));
  out.set_role("outer-quad", houter_m);
  out.set_role("inner-quad", hinner_m);
  out.set_role("external-attach", {mapped(far0), mapped(far1)});
  out.set_role("internal-attach", mapped(far_internal));
  out.set_role("seam", {ga.ext0, ga.ext1});
  out.validate_roles();
  return out;
}

namespace {

void put(Drawing& d, const VertexId& v, long x, long y) {
  d.positions[v] = Point{Rational(x), Rational(y)};
}

}  // namespace

Drawing seed_drawing(SeedClass cls) {
  const LabeledGraph lg = augmented_antiprism(4);
  Drawing d;
  d.graph = lg.graph;
  const long s = (cls == SeedClass::A) ? 1 : -1;
  put(d, "c", 0, 0);
  put(d, "o0", s * 3, 3);
  put(d, "o1", s * -3, 3);
  put(d, "o2", s * -3, -3);
  put(d, "o3", s * 3, -3);
  put(d, "i0", s * 2, 0);
  put(d, "i1", 0, 2);
  put(d, "i2", s * -2, 0);
  put(d, "i3", 0, -2);
  d.validate();
  return d;
}

Drawing extension_drawing() {
  const LabeledGraph a = augmented_antiprism(4);
  const LabeledGraph pair = extend(a, a, ExtendMode::Horizontal);
  Drawing d;
  d.graph = pair.graph;
  put(d, "c", 0, 0);
  put(d, "o0", 3, 3);
  put(d, "o1", -3, 3);
  put(d, "o2", -3, -3);
  put(d, "o3", 3, -3);
  put(d, "i0", 2, 0);
  put(d, "i1", 0, 2);
  put(d, "i2", -2, 0);
  put(d, "i3", 0, -2);
  // Second instance: mirrored and shifted right; o0_2/o3_2 merged away.
  put(d, "c_2", 6, 0);
  put(d, "o1_2", 9, 3);
  put(d, "o2_2", 9, -3);
  put(d, "i0_2", 4, 0);
  put(d, "i1_2", 6, 2);
  put(d, "i2_2", 8, 0);
  put(d, "i3_2", 6, -2);
  d.validate();
  return d;
}

}  // namespace racforge
