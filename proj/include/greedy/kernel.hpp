#pragma once

#include <compare>
#include <ostream>

#include "greedy/error.hpp"
#include "greedy/scalar.hpp"

namespace greedy {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
  // Lexicographic; used for sorting and duplicate detection only.
  friend bool operator<(const Point& p, const Point& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  }
  friend std::ostream& operator<<(std::ostream& os, const Point& p);
};

inline Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
/// Counter-clockwise quarter turn.
inline Point perp(const Point& u) { return {-u.y, u.x}; }
Point midpoint(const Point& p, const Point& q);

/// The closed half-plane { (x, y) : a*x + b*y <= c }.
struct HalfPlane {
  Scalar a;
  Scalar b;
  Scalar c;

  /// a*x + b*y - c; nonpositive inside.
  Scalar slack(const Point& p) const { return a * p.x + b * p.y - c; }
  bool contains(const Point& p) const { return sign(slack(p)) <= 0; }
  bool strictly_contains(const Point& p) const { return sign(slack(p)) < 0; }
  Point normal() const { return {a, b}; }

  /// True when both describe the same point set (coefficients proportional
  /// with a positive factor).
  bool same_set(const HalfPlane& other) const;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class CirclePosition { Inside, On, Outside };

Scalar dist_sq(const Point& p, const Point& q);

/// Double-precision shadow of a point, used only to filter comparisons.
struct Approx {
  double x;
  double y;
};
Approx approx(const Point& p);

/// Exact sign of dist_sq(a, x) - dist_sq(b, x). Decides in floating point when
/// the error bound allows it and falls back to rationals otherwise.
int compare_distance(const Point& a, const Approx& aa, const Point& b, const Approx& ab,
                     const Point& x, const Approx& ax);

Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Position of d relative to the circle through a, b, c. The orientation of
/// (a, b, c) is normalized internally.
CirclePosition in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

/// Sign of the raw in-circle determinant; positive means inside when (a, b, c)
/// is counter-clockwise. No orientation normalization.
int in_circle_det_sign(const Point& a, const Point& b, const Point& c, const Point& d);

Point circumcenter(const Point& a, const Point& b, const Point& c);

/// Points at least as close to `own` as to `other`:
/// { x : dist_sq(x, own) <= dist_sq(x, other) }.
HalfPlane bisector_halfplane(const Point& own, const Point& other);

/// True when p lies on segment [a, b] strictly between its endpoints.
bool strictly_between(const Point& a, const Point& b, const Point& p);

/// Closed segments [p1, q1] and [p2, q2] share a point other than a common endpoint.
bool segments_cross(const Point& p1, const Point& q1, const Point& p2, const Point& q2);

}  // namespace greedy
