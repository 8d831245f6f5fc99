#pragma once

// Test-only oracles. These deliberately avoid the library's geometry path:
// boost cpp_rational instead of GMP, plain all-pairs scans, and sign-only
// intersection logic written from the textbook formulas.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "racforge/checker.hpp"
#include "racforge/errors.hpp"
#include "racforge/graph.hpp"

namespace oracle {

using BigQ = boost::multiprecision::cpp_rational;
using racforge::Drawing;
using racforge::EdgeKey;
using racforge::Point;
using racforge::VertexId;

inline BigQ to_bigq(const racforge::Rational& r) {
  using BigZ = boost::multiprecision::cpp_int;
  return BigQ(BigZ(r.num().get_str()), BigZ(r.den().get_str()));
}

struct QPoint {
  BigQ x, y;
};

inline QPoint to_qpoint(const Point& p) { return {to_bigq(p.x), to_bigq(p.y)}; }

inline int det_sign(const QPoint& p, const QPoint& q, const QPoint& r) {
  const BigQ d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

inline bool between_closed(const BigQ& lo, const BigQ& hi, const BigQ& v) {
  return std::min(lo, hi) <= v && v <= std::max(lo, hi);
}

inline bool on_segment_closed(const QPoint& a, const QPoint& b, const QPoint& p) {
  return det_sign(a, b, p) == 0 && between_closed(a.x, b.x, p.x) && between_closed(a.y, b.y, p.y);
}

struct SegRelation {
  enum Kind { Disjoint, Proper, Touch, Overlap } kind = Disjoint;
  BigQ px, py;  // crossing point for Proper
};

inline SegRelation relate(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  SegRelation out;
  const int o1 = det_sign(a, b, c);
  const int o2 = det_sign(a, b, d);
  const int o3 = det_sign(c, d, a);
  const int o4 = det_sign(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: measure the shared extent on the dominant axis.
    const bool use_x = a.x != b.x;
    auto key = [&](const QPoint& p) { return use_x ? p.x : p.y; };
    const BigQ lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
    const BigQ hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
    if (lo > hi) return out;
    out.kind = (lo == hi) ? SegRelation::Touch : SegRelation::Overlap;
    return out;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    out.kind = SegRelation::Proper;
    const BigQ d1x = b.x - a.x, d1y = b.y - a.y;
    const BigQ d2x = d.x - c.x, d2y = d.y - c.y;
    const BigQ den = d1x * d2y - d1y * d2x;
    const BigQ t = ((c.x - a.x) * d2y - (c.y - a.y) * d2x) / den;
    out.px = a.x + t * d1x;
    out.py = a.y + t * d1y;
    return out;
  }
  if ((o1 == 0 && on_segment_closed(a, b, c)) || (o2 == 0 && on_segment_closed(a, b, d)) ||
      (o3 == 0 && on_segment_closed(c, d, a)) || (o4 == 0 && on_segment_closed(c, d, b))) {
    out.kind = SegRelation::Touch;
    return out;
  }
  return out;
}

struct BruteScan {
  bool degenerate = false;
  // Sorted (e1, e2) pairs with exact crossing points as canonical strings.
  std::vector<std::pair<EdgeKey, EdgeKey>> crossings;
  std::vector<std::pair<std::string, std::string>> points;
};

inline BruteScan brute_force_scan(const Drawing& d) {
  BruteScan out;
  const auto& edges = d.graph.edges();
  // Vertex interior to a non-incident edge.
  for (const auto& e : edges) {
    const QPoint a = to_qpoint(d.at(e.u)), b = to_qpoint(d.at(e.v));
    for (const auto& v : d.graph.vertices()) {
      if (e.incident(v)) continue;
      const QPoint p = to_qpoint(d.at(v));
      if (on_segment_closed(a, b, p)) out.degenerate = true;
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const EdgeKey& e1 = edges[i];
      const EdgeKey& e2 = edges[j];
      const SegRelation rel = relate(to_qpoint(d.at(e1.u)), to_qpoint(d.at(e1.v)),
                                     to_qpoint(d.at(e2.u)), to_qpoint(d.at(e2.v)));
      const bool adjacent = e1.shares_endpoint(e2);
      switch (rel.kind) {
        case SegRelation::Proper:
          out.crossings.emplace_back(e1, e2);
          out.points.emplace_back(rel.px.str(), rel.py.str());
          break;
        case SegRelation::Overlap:
          out.degenerate = true;
          break;
        case SegRelation::Touch:
          if (!adjacent) out.degenerate = true;
          break;
        default:
          break;
      }
    }
  }
  return out;
}

// Degree-sum edge count oracle for the augmented antiprism family.
inline long antiprism_edges_by_degree_sum(int k) {
  const long ring_vertices = 2L * k;
  const long degree_sum = ring_vertices * 5 + 2L * k;  // hub degree 2k
  return degree_sum / 2;
}

// Explicit adjacency-merge oracle for the extension operator.
struct MergeCounts {
  long vertices;
  long edges;
};

inline MergeCounts merge_counts(const racforge::Graph& g, const racforge::Graph& h,
                                const VertexId& g0, const VertexId& g1, const VertexId& h0,
                                const VertexId& h1) {
  auto mapped = [&](const VertexId& v) -> VertexId {
    if (v == h0) return g0;
    if (v == h1) return g1;
    return "merge~" + v;
  };
  std::vector<VertexId> verts(g.vertices());
  for (const auto& v : h.vertices()) {
    if (v == h0 || v == h1) continue;
    verts.push_back(mapped(v));
  }
  std::vector<EdgeKey> edges(g.edges());
  for (const auto& e : h.edges()) edges.emplace_back(mapped(e.u), mapped(e.v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {static_cast<long>(verts.size()), static_cast<long>(edges.size()) + 1};  // + inner tie
}

// Random small drawings for the oracle-equivalence sweeps. Positions are
// random rationals with small numerators; coincident points are rejected.
inline Drawing random_drawing(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv_dist(2, max_vertices);
  std::uniform_int_distribution<int> coord(-24, 24);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_real_distribution<double> edge_p(0.0, 1.0);
  const int nv = nv_dist(rng);
  Drawing d;
  for (int i = 0; i < nv; ++i) d.graph.add_vertex("v" + std::to_string(i));
  const double p = 0.15 + 0.5 * edge_p(rng);
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (edge_p(rng) < p) {
        d.graph.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
      }
    }
  }
  while (true) {
    d.positions.clear();
    for (int i = 0; i < nv; ++i) {
      d.positions["v" + std::to_string(i)] =
          Point{racforge::Rational(coord(rng), den(rng)), racforge::Rational(coord(rng), den(rng))};
    }
    try {
      d.validate();
      break;
    } catch (const racforge::InvalidParameter&) {
      continue;
    }
  }
  return d;
}

}  // namespace oracle
