#pragma once

#include <optional>

#include "racforge/rational.hpp"

namespace racforge {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Non-degenerate closed segment; construction rejects a == b.
struct Segment {
  Point a;
  Point b;
  Segment(Point a_, Point b_);
};

/// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, -1 clockwise,
/// 0 collinear. Exact for any rational inputs.
int orientation(const Point& p, const Point& q, const Point& r);

enum class IntersectKind { Disjoint, ProperCrossing, EndpointTouch, CollinearOverlap };

struct Intersection {
  IntersectKind kind = IntersectKind::Disjoint;
  std::optional<Point> point;  // set for ProperCrossing and EndpointTouch
};

/// Classifies how two segments meet. ProperCrossing means the open interiors
/// share exactly one point, returned exactly.
Intersection intersect(const Segment& s1, const Segment& s2);

/// Exact right-angle test on the supporting lines (dot product of directions).
bool is_perpendicular(const Segment& s1, const Segment& s2);

/// Minimum angle between the two supporting lines, in degrees, computed in
/// floating point. Reporting only; never used for validity decisions.
double angle_degrees(const Segment& s1, const Segment& s2);

/// True iff r lies strictly between p and q on the segment p-q (collinear and
/// interior). Exact.
bool strictly_inside_segment(const Point& p, const Point& q, const Point& r);

}  // namespace racforge
