#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "racforge/errors.hpp"
#include "racforge/geometry.hpp"

using namespace racforge;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }
Point ptq(long xn, long xd, long yn, long yd) {
  return Point{Rational(xn, xd), Rational(yn, yd)};
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");  // denominator forced positive
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("-3/9").str() == "-1/3");
  CHECK(Rational::parse("4/2") == Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse("x"), InvalidParameter);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 7)).str() == "1/7");
}

TEST_CASE("orientation on the unit triangle and collinear points") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orientation matches an independent big-integer determinant") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<long> nums(-1000, 1000);
  std::uniform_int_distribution<long> dens(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    Point p = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    Point q = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    Point r = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    const int lib = orientation(p, q, r);
    const int ora = oracle::det_sign(oracle::to_qpoint(p), oracle::to_qpoint(q),
                                     oracle::to_qpoint(r));
    CHECK(lib == ora);
    CHECK(orientation(p, q, r) == -orientation(p, r, q));
    CHECK(orientation(q, r, p) == lib);  // cyclic permutation preserves sign
  }
}

TEST_CASE("orientation huge-coordinate path agrees with the small-int path") {
  // Same geometry scaled by 2^40 must give the same sign via the gmp route.
  const Rational big(mpz_class(1) << 40, mpz_class(1));
  auto scale = [&](const Point& p) { return Point{p.x * big, p.y * big}; };
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> nums(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    Point p = pt(nums(rng), nums(rng));
    Point q = pt(nums(rng), nums(rng));
    Point r = pt(nums(rng), nums(rng));
    CHECK(orientation(p, q, r) == orientation(scale(p), scale(q), scale(r)));
  }
}

TEST_CASE("segment construction rejects coincident endpoints") {
  CHECK_THROWS_AS(Segment(pt(1, 1), pt(1, 1)), InvalidParameter);
}

TEST_CASE("intersect classifies crossings, touches and overlaps") {
  const auto cross = intersect(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, -1), pt(1, 1)));
  CHECK(cross.kind == IntersectKind::ProperCrossing);
  REQUIRE(cross.point.has_value());
  CHECK(cross.point->x == Rational(1));
  CHECK(cross.point->y == Rational(0));

  const auto touch = intersect(Segment(pt(0, 0), pt(1, 0)), Segment(pt(1, 0), pt(2, 1)));
  CHECK(touch.kind == IntersectKind::EndpointTouch);
  REQUIRE(touch.point.has_value());
  CHECK(touch.point->x == Rational(1));

  const auto overlap = intersect(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(3, 0)));
  CHECK(overlap.kind == IntersectKind::CollinearOverlap);

  const auto tee = intersect(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(1, 5)));
  CHECK(tee.kind == IntersectKind::EndpointTouch);

  const auto far = intersect(Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 1), pt(1, 1)));
  CHECK(far.kind == IntersectKind::Disjoint);

  const auto collinear_touch = intersect(Segment(pt(0, 0), pt(1, 0)), Segment(pt(1, 0), pt(2, 0)));
  CHECK(collinear_touch.kind == IntersectKind::EndpointTouch);
}

TEST_CASE("intersect is symmetric with the same crossing point") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> nums(-40, 40);
  std::uniform_int_distribution<long> dens(1, 6);
  int proper_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Point a = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    Point b = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    Point c = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    Point d = ptq(nums(rng), dens(rng), nums(rng), dens(rng));
    if (a == b || c == d) continue;
    const auto ab = intersect(Segment(a, b), Segment(c, d));
    const auto ba = intersect(Segment(c, d), Segment(a, b));
    CHECK(ab.kind == ba.kind);
    if (ab.point && ba.point) {
      CHECK(*ab.point == *ba.point);
    } else {
      CHECK(ab.point.has_value() == ba.point.has_value());
    }
    if (ab.kind == IntersectKind::ProperCrossing) {
      ++proper_seen;
      // Cross-check the point against the boost route.
      const auto rel = oracle::relate(oracle::to_qpoint(a), oracle::to_qpoint(b),
                                      oracle::to_qpoint(c), oracle::to_qpoint(d));
      REQUIRE(rel.kind == oracle::SegRelation::Proper);
      CHECK(oracle::to_bigq(ab.point->x) == rel.px);
      CHECK(oracle::to_bigq(ab.point->y) == rel.py);
    }
  }
  CHECK(proper_seen > 100);  // the sweep actually exercised crossings
}

TEST_CASE("perpendicularity is exact") {
  CHECK(is_perpendicular(Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 0), pt(0, 1))));
  CHECK(is_perpendicular(Segment(pt(0, 0), pt(1, 1)), Segment(pt(0, 1), pt(1, 0))));
  CHECK_FALSE(is_perpendicular(Segment(pt(0, 0), pt(1, 1)), Segment(pt(0, 0), pt(2, 1))));
}

TEST_CASE("angle_degrees on reference pairs") {
  CHECK(angle_degrees(Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 0), pt(0, 1))) ==
        doctest::Approx(90.0));
  CHECK(angle_degrees(Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 0), pt(1, 1))) ==
        doctest::Approx(45.0));
  // Slopes 1 and 1/2: tan(theta) = 1/3.
  const double expected = std::atan(1.0 / 3.0) * 180.0 / M_PI;
  CHECK(angle_degrees(Segment(pt(0, 0), pt(1, 1)), Segment(pt(0, 0), pt(2, 1))) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("perpendicular iff angle is 90 within 1e-9 for bounded coordinates") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> nums(-60, 60);
  for (int trial = 0; trial < 3000; ++trial) {
    Point a = pt(nums(rng), nums(rng));
    Point b = pt(nums(rng), nums(rng));
    Point c = pt(nums(rng), nums(rng));
    Point d = pt(nums(rng), nums(rng));
    if (a == b || c == d) continue;
    const Segment s1(a, b), s2(c, d);
    const bool exact = is_perpendicular(s1, s2);
    const bool approx = std::abs(angle_degrees(s1, s2) - 90.0) < 1e-9;
    CHECK(exact == approx);
  }
}
