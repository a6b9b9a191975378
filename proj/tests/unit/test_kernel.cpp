#include <doctest.h>

#include "fixtures.hpp"
#include "greedy/kernel.hpp"

using namespace greedy;
using namespace fixtures;

TEST_CASE("parse_scalar reads integers, decimals and fractions exactly") {
  CHECK(parse_scalar("12") == 12);
  CHECK(parse_scalar("-3") == -3);
  CHECK(parse_scalar("1.25") == Scalar(5, 4));
  CHECK(parse_scalar("-0.5") == Scalar(-1, 2));
  CHECK(parse_scalar(".5") == Scalar(1, 2));
  CHECK(parse_scalar("10/4") == Scalar(5, 2));
  CHECK(parse_scalar("-7/3") == Scalar(-7, 3));
  CHECK(parse_scalar("0.1") + parse_scalar("0.2") == parse_scalar("0.3"));
  for (const char* bad : {"", "-", "1/0", "abc", "1.2.3", "1e5", "3/-4", "."}) {
    CHECK_THROWS_AS(parse_scalar(bad), Error);
  }
}

TEST_CASE("format_scalar round-trips") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    Scalar v(rng.uniform(-100000, 100000), rng.uniform(1, 999));
    v.canonicalize();
    CHECK(parse_scalar(format_scalar(v)) == v);
  }
}

TEST_CASE("dist_sq") {
  CHECK(dist_sq(P(0, 0), P(3, 4)) == 25);
  CHECK(dist_sq(P(1, 1), P(1, 1)) == 0);
  CHECK(dist_sq(P(0, 0), P("1/2", "1/3")) == Scalar(13, 36));
}

TEST_CASE("orientation") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == Orientation::CW);
}

TEST_CASE("in_circle") {
  CHECK(in_circle(P(0, 0), P(2, 0), P(0, 2), P(2, 2)) == CirclePosition::On);
  CHECK(in_circle(P(0, 0), P(2, 0), P(0, 2), P(1, 1)) == CirclePosition::Inside);
  CHECK(in_circle(P(0, 0), P(2, 0), P(0, 2), P(10, 10)) == CirclePosition::Outside);
  // Clockwise input gives the same answers.
  CHECK(in_circle(P(0, 0), P(0, 2), P(2, 0), P(1, 1)) == CirclePosition::Inside);
  CHECK(in_circle(P(0, 0), P(0, 2), P(2, 0), P(10, 10)) == CirclePosition::Outside);
  CHECK_THROWS_AS(in_circle(P(0, 0), P(1, 0), P(2, 0), P(5, 5)), Error);
}

TEST_CASE("circumcenter") {
  CHECK(circumcenter(P(0, 0), P(2, 0), P(0, 2)) == P(1, 1));
  CHECK(circumcenter(P(0, 0), P(4, 0), P(0, 4)) == P(2, 2));
  try {
    circumcenter(P(0, 0), P(1, 0), P(2, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CollinearDefiningPoints);
  }
}

TEST_CASE("bisector_halfplane") {
  CHECK(bisector_halfplane(P(0, 0), P(2, 0)).same_set({1, 0, 1}));
  CHECK(bisector_halfplane(P(0, 0), P(0, 2)).same_set({0, 1, 1}));
  CHECK(bisector_halfplane(P(0, 0), P(2, 2)).same_set({1, 1, 2}));
  CHECK_FALSE(bisector_halfplane(P(0, 0), P(2, 0)).same_set({-1, 0, -1}));
  try {
    bisector_halfplane(P(1, 1), P(1, 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CoincidentSites);
  }
}

TEST_CASE("kernel properties on random rational points") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Point a = random_rational_point(rng, -20, 20);
    Point b = random_rational_point(rng, -20, 20);
    Point c = random_rational_point(rng, -20, 20);
    Point x = random_rational_point(rng, -40, 40);

    CHECK(static_cast<int>(orientation(a, b, c)) == -static_cast<int>(orientation(a, c, b)));
    CHECK(dist_sq(a, b) == dist_sq(b, a));

    if (!(a == b)) {
      HalfPlane h = bisector_halfplane(a, b);
      CHECK((dist_sq(x, a) <= dist_sq(x, b)) == h.contains(x));
      CHECK((dist_sq(x, a) < dist_sq(x, b)) == h.strictly_contains(x));
    }

    if (orientation(a, b, c) != Orientation::Collinear) {
      Point cc = circumcenter(a, b, c);
      CHECK(dist_sq(cc, a) == dist_sq(cc, b));
      CHECK(dist_sq(cc, b) == dist_sq(cc, c));

      CirclePosition pos = in_circle(a, b, c, x);
      CHECK(in_circle(b, c, a, x) == pos);
      CHECK(in_circle(c, a, b, x) == pos);
      CHECK(in_circle(a, c, b, x) == pos);
      // Independent route: compare against the circumradius.
      int expected = sign(dist_sq(cc, a) - dist_sq(cc, x));
      CHECK(pos == (expected > 0   ? CirclePosition::Inside
                    : expected < 0 ? CirclePosition::Outside
                                   : CirclePosition::On));
    }
  }
}

TEST_CASE("segments_cross") {
  CHECK(segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  CHECK_FALSE(segments_cross(P(0, 0), P(2, 0), P(2, 0), P(2, 2)));
  CHECK(segments_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 5)));
  CHECK(segments_cross(P(0, 0), P(2, 0), P(0, 0), P(1, 0)));
  CHECK_FALSE(segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
}

TEST_CASE("compare_distance matches exact arithmetic") {
  auto check = [](const Point& a, const Point& b, const Point& x) {
    int exact = sign(dist_sq(a, x) - dist_sq(b, x));
    CHECK(compare_distance(a, approx(a), b, approx(b), x, approx(x)) == exact);
  };
  Rng rng(77);
  for (int k = 0; k < 3000; ++k) {
    Point a = fixtures::random_rational_point(rng, -1000000, 1000000);
    Point b = fixtures::random_rational_point(rng, -1000000, 1000000);
    Point x = fixtures::random_rational_point(rng, -1000000, 1000000);
    check(a, b, x);
    // Exact ties: x on the bisector, then nudged off it by a tiny amount.
    Point mid = midpoint(a, b);
    Point on = mid + Scalar(static_cast<long>(rng.below(7)) - 3) * perp(b - a);
    check(a, b, on);
    Scalar tiny(1, 1000000000);
    tiny *= tiny;
    check(a, b, on + tiny * (b - a));
    check(a, b, on - tiny * (b - a));
  }
  // Magnitudes outside the filter's range go to the exact path.
  Scalar huge = Scalar(mpz_class(1) << 900);
  check(P(0, 0), Point{huge, Scalar(0)}, Point{huge / 2, Scalar(1)});
  Scalar small = Scalar(1) / huge;
  check(P(0, 0), Point{small, Scalar(0)}, Point{small / 2, small});
  check(P(0, 0), Point{small, Scalar(0)}, Point{small / 3, Scalar(0)});
}
