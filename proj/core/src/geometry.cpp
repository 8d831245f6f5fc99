#include "racforge/geometry.hpp"

#include <cmath>

#include "racforge/errors.hpp"

namespace racforge {

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == b) throw InvalidParameter("degenerate segment: endpoints coincide");
}

namespace {

#ifdef __SIZEOF_INT128__
inline bool all_small(const Point& p, const Point& q, const Point& r) {
  return p.x.fits_small_int() && p.y.fits_small_int() && q.x.fits_small_int() &&
         q.y.fits_small_int() && r.x.fits_small_int() && r.y.fits_small_int();
}

inline int sign128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
#endif

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
#ifdef __SIZEOF_INT128__
  if (all_small(p, q, r)) {
    // Diffs fit in 2^31, products in 2^62: exact in 128-bit integers.
    const __int128 qx = q.x.small_int() - p.x.small_int();
    const __int128 qy = q.y.small_int() - p.y.small_int();
    const __int128 rx = r.x.small_int() - p.x.small_int();
    const __int128 ry = r.y.small_int() - p.y.small_int();
    return sign128(qx * ry - qy * rx);
  }
#endif
  const mpq_class qx = q.x.raw() - p.x.raw();
  const mpq_class qy = q.y.raw() - p.y.raw();
  const mpq_class rx = r.x.raw() - p.x.raw();
  const mpq_class ry = r.y.raw() - p.y.raw();
  return sgn(mpq_class(qx * ry - qy * rx));
}

bool strictly_inside_segment(const Point& p, const Point& q, const Point& r) {
  if (orientation(p, q, r) != 0) return false;
  if (p.x != q.x) {
    return (min(p.x, q.x) < r.x) && (r.x < max(p.x, q.x));
  }
  return (min(p.y, q.y) < r.y) && (r.y < max(p.y, q.y));
}

Intersection intersect(const Segment& s1, const Segment& s2) {
  const Point& a = s1.a;
  const Point& b = s1.b;
  const Point& c = s2.a;
  const Point& d = s2.b;

  const Rational d1x = b.x - a.x, d1y = b.y - a.y;
  const Rational d2x = d.x - c.x, d2y = d.y - c.y;
  const Rational denom = d1x * d2y - d1y * d2x;

  if (denom.sign() != 0) {
    // Lines meet in exactly one point: a + t*d1 = c + s*d2.
    const Rational ex = c.x - a.x, ey = c.y - a.y;
    const Rational t = (ex * d2y - ey * d2x) / denom;
    const Rational s = (ex * d1y - ey * d1x) / denom;
    const Rational zero(0), one(1);
    if (t < zero || t > one || s < zero || s > one) return {IntersectKind::Disjoint, {}};
    Point p{a.x + t * d1x, a.y + t * d1y};
    const bool interior1 = t > zero && t < one;
    const bool interior2 = s > zero && s < one;
    if (interior1 && interior2) return {IntersectKind::ProperCrossing, p};
    return {IntersectKind::EndpointTouch, p};
  }

  // Parallel lines.
  if (orientation(a, b, c) != 0) return {IntersectKind::Disjoint, {}};

  // Collinear: compare overlap along the dominant axis.
  const bool use_x = (a.x != b.x);
  auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
  const Rational lo1 = min(key(a), key(b)), hi1 = max(key(a), key(b));
  const Rational lo2 = min(key(c), key(d)), hi2 = max(key(c), key(d));
  const Rational lo = max(lo1, lo2), hi = min(hi1, hi2);
  if (lo > hi) return {IntersectKind::Disjoint, {}};
  if (lo == hi) {
    // Single shared point; it is an endpoint of at least one segment.
    const Point p = (key(a) == lo) ? a : (key(b) == lo) ? b : (key(c) == lo) ? c : d;
    return {IntersectKind::EndpointTouch, p};
  }
  return {IntersectKind::CollinearOverlap, {}};
}

bool is_perpendicular(const Segment& s1, const Segment& s2) {
  const Rational d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
  const Rational d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
  return (d1x * d2x + d1y * d2y).sign() == 0;
}

double angle_degrees(const Segment& s1, const Segment& s2) {
  const double ux = (s1.b.x - s1.a.x).to_double();
  const double uy = (s1.b.y - s1.a.y).to_double();
  const double vx = (s2.b.x - s2.a.x).to_double();
  const double vy = (s2.b.y - s2.a.y).to_double();
  const double dot = ux * vx + uy * vy;
  const double nu = std::hypot(ux, uy);
  const double nv = std::hypot(vx, vy);
  if (nu == 0.0 || nv == 0.0) throw InvalidParameter("angle of degenerate segment");
  double c = std::abs(dot) / (nu * nv);
  if (c > 1.0) c = 1.0;
  return std::acos(c) * 180.0 / M_PI;
}

}  // namespace racforge
