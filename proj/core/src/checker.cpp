#include "racforge/checker.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "racforge/errors.hpp"

namespace racforge {

std::string Degeneracy::str() const {
  switch (kind) {
    case DegeneracyKind::VertexOnEdge:
      return "vertex " + *vertex + " lies on edge " + e1.str();
    case DegeneracyKind::CollinearOverlap:
      return "edges " + e1.str() + " and " + e2->str() + " overlap collinearly";
    case DegeneracyKind::EndpointTouch:
      return "non-adjacent edges " + e1.str() + " and " + e2->str() + " touch at an endpoint";
  }
  return "unknown degeneracy";
}

DegenerateDrawing::DegenerateDrawing(std::vector<Degeneracy> offs)
    : std::runtime_error([&offs] {
        std::string msg = "degenerate drawing:";
        for (const auto& d : offs) msg += "\n  " + d.str();
        return msg;
      }()),
      offenders(std::move(offs)) {}

namespace {

struct ScanResult {
  std::vector<Crossing> crossings;
  std::vector<Degeneracy> degeneracies;
};

struct CellRange {
  long x0, x1, y0, y1;
};

bool bbox_overlap(const Point& a1, const Point& b1, const Point& a2, const Point& b2) {
  if (max(a1.x, b1.x) < min(a2.x, b2.x)) return false;
  if (max(a2.x, b2.x) < min(a1.x, b1.x)) return false;
  if (max(a1.y, b1.y) < min(a2.y, b2.y)) return false;
  if (max(a2.y, b2.y) < min(a1.y, b1.y)) return false;
  return true;
}

bool coordinate_fits_grid(const Point& p) {
  auto ok = [](const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q.fits_slong_p() && q.get_si() < (1L << 40) && q.get_si() > -(1L << 40);
  };
  return ok(p.x) && ok(p.y);
}

// Candidate edge pairs and vertex/edge incidences via a uniform grid over
// bounding boxes. Purely a prefilter: exact predicates decide afterwards.
ScanResult scan_drawing(const Drawing& d) {
  d.validate();
  ScanResult out;
  const auto& edges = d.graph.edges();
  const auto& verts = d.graph.vertices();
  const std::size_t ne = edges.size();

  bool use_grid = true;
  long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& v : verts) {
    const Point& p = d.at(v);
    if (!coordinate_fits_grid(p)) {
      use_grid = false;
      break;
    }
    const long fx = floor_div_long(p.x, 1), fy = floor_div_long(p.y, 1);
    if (first) {
      xmin = xmax = fx;
      ymin = ymax = fy;
      first = false;
    } else {
      xmin = std::min(xmin, fx);
      xmax = std::max(xmax, fx);
      ymin = std::min(ymin, fy);
      ymax = std::max(ymax, fy);
    }
  }
  const long extent = std::max(xmax - xmin, ymax - ymin) + 1;
  const long cell = std::max(1L, (extent + 255) / 256);

  std::unordered_map<long long, std::vector<int>> grid;
  auto key = [](long cx, long cy) {
    return (static_cast<long long>(cx) << 32) ^ (cy & 0xffffffffLL);
  };
  auto bbox_cells = [&](const Point& a, const Point& b) {
    CellRange r;
    r.x0 = floor_div_long(min(a.x, b.x), cell);
    r.x1 = floor_div_long(max(a.x, b.x), cell);
    r.y0 = floor_div_long(min(a.y, b.y), cell);
    r.y1 = floor_div_long(max(a.y, b.y), cell);
    return r;
  };

  std::vector<std::pair<int, int>> candidates;
  std::vector<CellRange> ranges(ne);
  if (use_grid) {
    for (std::size_t i = 0; i < ne; ++i) {
      ranges[i] = bbox_cells(d.at(edges[i].u), d.at(edges[i].v));
      for (long cx = ranges[i].x0; cx <= ranges[i].x1; ++cx) {
        for (long cy = ranges[i].y0; cy <= ranges[i].y1; ++cy) {
          grid[key(cx, cy)].push_back(static_cast<int>(i));
        }
      }
    }
    for (const auto& [k, bucket] : grid) {
      (void)k;
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          candidates.emplace_back(std::min(bucket[a], bucket[b]), std::max(bucket[a], bucket[b]));
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  } else {
    for (std::size_t i = 0; i < ne; ++i) {
      for (std::size_t j = i + 1; j < ne; ++j) {
        candidates.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }

  for (const auto& [i, j] : candidates) {
    const EdgeKey& e1 = edges[i];
    const EdgeKey& e2 = edges[j];
    const Point& a1 = d.at(e1.u);
    const Point& b1 = d.at(e1.v);
    const Point& a2 = d.at(e2.u);
    const Point& b2 = d.at(e2.v);
    if (!bbox_overlap(a1, b1, a2, b2)) continue;
    const Segment s1(a1, b1), s2(a2, b2);
    const Intersection isect = intersect(s1, s2);
    if (isect.kind == IntersectKind::Disjoint) continue;
    const bool adjacent = e1.shares_endpoint(e2);
    switch (isect.kind) {
      case IntersectKind::ProperCrossing:
        out.crossings.push_back({e1, e2, *isect.point, is_perpendicular(s1, s2)});
        break;
      case IntersectKind::CollinearOverlap:
        out.degeneracies.push_back({DegeneracyKind::CollinearOverlap, {}, e1, e2});
        break;
      case IntersectKind::EndpointTouch:
        if (!adjacent) out.degeneracies.push_back({DegeneracyKind::EndpointTouch, {}, e1, e2});
        break;
      default:
        break;
    }
  }

  // Vertices interior to non-incident edges.
  if (use_grid) {
    std::unordered_map<long long, std::vector<int>> vgrid;
    for (std::size_t vi = 0; vi < verts.size(); ++vi) {
      const Point& p = d.at(verts[vi]);
      vgrid[key(floor_div_long(p.x, cell), floor_div_long(p.y, cell))].push_back(
          static_cast<int>(vi));
    }
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < ne; ++i) {
      const EdgeKey& e = edges[i];
      const Point& a = d.at(e.u);
      const Point& b = d.at(e.v);
      for (long cx = ranges[i].x0; cx <= ranges[i].x1; ++cx) {
        for (long cy = ranges[i].y0; cy <= ranges[i].y1; ++cy) {
          auto it = vgrid.find(key(cx, cy));
          if (it == vgrid.end()) continue;
          for (int vi : it->second) {
            const VertexId& v = verts[vi];
            if (e.incident(v)) continue;
            if (!seen.emplace(static_cast<int>(i), vi).second) continue;
            if (strictly_inside_segment(a, b, d.at(v))) {
              out.degeneracies.push_back({DegeneracyKind::VertexOnEdge, v, e, {}});
            }
          }
        }
      }
    }
  } else {
    for (const auto& e : edges) {
      const Point& a = d.at(e.u);
      const Point& b = d.at(e.v);
      for (const auto& v : verts) {
        if (e.incident(v)) continue;
        if (strictly_inside_segment(a, b, d.at(v))) {
          out.degeneracies.push_back({DegeneracyKind::VertexOnEdge, v, e, {}});
        }
      }
    }
  }

  std::sort(out.crossings.begin(), out.crossings.end(), [](const Crossing& a, const Crossing& b) {
    return a.e1 != b.e1 ? a.e1 < b.e1 : a.e2 < b.e2;
  });
  return out;
}

std::vector<std::array<EdgeKey, 3>> mutual_triples(const std::vector<Crossing>& crossings) {
  std::map<EdgeKey, std::set<EdgeKey>> partners;
  for (const auto& c : crossings) {
    partners[c.e1].insert(c.e2);
    partners[c.e2].insert(c.e1);
  }
  std::vector<std::array<EdgeKey, 3>> out;
  for (const auto& c : crossings) {
    const auto& p1 = partners[c.e1];
    const auto& p2 = partners[c.e2];
    for (const auto& e3 : p1) {
      if (e3 < c.e2 || e3 == c.e2) continue;  // enforce e1 < e2 < e3
      if (p2.count(e3)) out.push_back({c.e1, c.e2, e3});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Strictly inside / strictly outside / on boundary of a non-degenerate triangle.
enum class TriSide { Inside, Outside, Boundary };

TriSide triangle_side(const Point& t0, const Point& t1, const Point& t2, int tri_orient,
                      const Point& p) {
  const int o0 = orientation(t0, t1, p);
  const int o1 = orientation(t1, t2, p);
  const int o2 = orientation(t2, t0, p);
  if (o0 == tri_orient && o1 == tri_orient && o2 == tri_orient) return TriSide::Inside;
  if (o0 == 0 || o1 == 0 || o2 == 0) {
    // On a supporting line: boundary only if within the closed triangle.
    if (o0 != -tri_orient && o1 != -tri_orient && o2 != -tri_orient) return TriSide::Boundary;
  }
  return TriSide::Outside;
}

TriangleFenceReport triangle_fence(const Drawing& d) {
  TriangleFenceReport report;
  const Graph& g = d.graph;
  const auto& verts = g.vertices();

  // Vertices sorted by x for bbox-local inside candidates.
  std::vector<std::size_t> order(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.at(verts[a]).x < d.at(verts[b]).x;
  });
  std::vector<Rational> xs;
  xs.reserve(order.size());
  for (auto i : order) xs.push_back(d.at(verts[i]).x);

  // Enumerate triangles u < v < w.
  for (const auto& e : g.edges()) {
    const auto nu = g.neighbors(e.u);
    for (const auto& w : nu) {
      if (!(e.v < w)) continue;
      if (!g.has_edge(e.v, w)) continue;
      const std::array<VertexId, 3> tri{e.u, e.v, w};
      const Point& t0 = d.at(tri[0]);
      const Point& t1 = d.at(tri[1]);
      const Point& t2 = d.at(tri[2]);
      const int tor = orientation(t0, t1, t2);
      if (tor == 0) continue;  // degenerate triangle: no interior
      const Rational xlo = min(min(t0.x, t1.x), t2.x);
      const Rational xhi = max(max(t0.x, t1.x), t2.x);
      auto lo = std::lower_bound(xs.begin(), xs.end(), xlo) - xs.begin();
      auto hi = std::upper_bound(xs.begin(), xs.end(), xhi) - xs.begin();

      std::map<VertexId, std::vector<VertexId>> outside_apex_to_inside;
      for (auto idx = lo; idx < hi; ++idx) {
        const VertexId& cand = verts[order[idx]];
        if (cand == tri[0] || cand == tri[1] || cand == tri[2]) continue;
        const TriSide side = triangle_side(t0, t1, t2, tor, d.at(cand));
        if (side == TriSide::Boundary) {
          report.boundary.push_back({tri, cand});
          continue;
        }
        if (side != TriSide::Inside) continue;
        for (const auto& a : g.neighbors(cand)) {
          if (a == tri[0] || a == tri[1] || a == tri[2]) continue;
          if (triangle_side(t0, t1, t2, tor, d.at(a)) == TriSide::Outside) {
            outside_apex_to_inside[a].push_back(cand);
          }
        }
      }
      for (auto& [apex, inside] : outside_apex_to_inside) {
        if (inside.size() >= 2) {
          std::sort(inside.begin(), inside.end());
          report.violations.push_back({tri, apex, inside});
        }
      }
    }
  }
  return report;
}

}  // namespace

std::vector<Crossing> enumerate_crossings(const Drawing& d) {
  ScanResult scan = scan_drawing(d);
  if (!scan.degeneracies.empty()) throw DegenerateDrawing(std::move(scan.degeneracies));
  return std::move(scan.crossings);
}

RacReport check_rac(const Drawing& d) {
  ScanResult scan = scan_drawing(d);
  RacReport report;
  report.crossings = std::move(scan.crossings);
  report.degeneracies = std::move(scan.degeneracies);
  report.is_rac = report.degeneracies.empty();
  for (const auto& c : report.crossings) {
    if (!c.perpendicular) report.is_rac = false;
    const double ang = angle_degrees(d.segment(c.e1), d.segment(c.e2));
    if (!report.min_angle_degrees || ang < *report.min_angle_degrees) {
      report.min_angle_degrees = ang;
    }
  }
  report.property1_violations = mutual_triples(report.crossings);
  TriangleFenceReport fence = triangle_fence(d);
  report.property2_violations = std::move(fence.violations);
  report.property2_boundary = std::move(fence.boundary);
  return report;
}

std::vector<std::array<EdgeKey, 3>> diagnose_three_mutual(const Drawing& d) {
  return mutual_triples(enumerate_crossings(d));
}

TriangleFenceReport diagnose_triangle_fence(const Drawing& d) {
  ScanResult scan = scan_drawing(d);
  if (!scan.degeneracies.empty()) throw DegenerateDrawing(std::move(scan.degeneracies));
  return triangle_fence(d);
}

BoundCheck edge_bound_check(const Graph& g) {
  BoundCheck out;
  out.rule = "4n-10";
  out.edges = static_cast<long>(g.edge_count());
  const long n = static_cast<long>(g.vertex_count());
  if (n < 4) {
    out.verdict = BoundVerdict::NotApplicable;
    return out;
  }
  out.bound = 4 * n - 10;
  out.verdict = out.edges <= out.bound ? BoundVerdict::Within : BoundVerdict::Exceeds;
  out.tight = out.edges == out.bound;
  return out;
}

BoundCheck planar_bound_check(const Graph& g) {
  BoundCheck out;
  out.rule = "3n-6";
  out.edges = static_cast<long>(g.edge_count());
  const long n = static_cast<long>(g.vertex_count());
  if (n < 3) {
    out.verdict = BoundVerdict::NotApplicable;
    return out;
  }
  out.bound = 3 * n - 6;
  out.verdict = out.edges <= out.bound ? BoundVerdict::Within : BoundVerdict::Exceeds;
  out.tight = out.edges == out.bound;
  return out;
}

}  // namespace racforge
