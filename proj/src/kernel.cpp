#include "greedy/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace greedy {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << format_scalar(p.x) << ", " << format_scalar(p.y) << ')';
}

Point midpoint(const Point& p, const Point& q) {
  Scalar x = (p.x + q.x) / 2;
  Scalar y = (p.y + q.y) / 2;
  return {x, y};
}

bool HalfPlane::same_set(const HalfPlane& other) const {
  // Proportional iff all 2x2 minors vanish; positive factor iff the normals agree in direction.
  if (a * other.b != b * other.a) return false;
  if (a * other.c != c * other.a) return false;
  if (b * other.c != c * other.b) return false;
  return sign(a * other.a + b * other.b) > 0;
}

Scalar dist_sq(const Point& p, const Point& q) {
  Scalar dx = p.x - q.x;
  Scalar dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Approx approx(const Point& p) { return {p.x.get_d(), p.y.get_d()}; }

int compare_distance(const Point& a, const Approx& aa, const Point& b, const Approx& ab,
                     const Point& x, const Approx& ax) {
  // mpq_get_d truncates, so each input carries relative error below 2^-52.
  // Every term is bounded by m^2; the accumulated error stays well under
  // 128 * 2^-52 * m^2.
  double m = std::max({std::abs(aa.x), std::abs(aa.y), std::abs(ab.x), std::abs(ab.y),
                       std::abs(ax.x), std::abs(ax.y)});
  double m2 = m * m;
  if (m2 > 1e-250 && m2 < 1e250) {
    double ux = aa.x - ax.x, uy = aa.y - ax.y;
    double vx = ab.x - ax.x, vy = ab.y - ax.y;
    double diff = (ux * ux + uy * uy) - (vx * vx + vy * vy);
    double bound = 0x1p-45 * m2;
    if (diff > bound) return 1;
    if (diff < -bound) return -1;
  }
  return sign(dist_sq(a, x) - dist_sq(b, x));
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  Scalar det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return static_cast<Orientation>(sign(det));
}

int in_circle_det_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  Scalar adx = a.x - d.x, ady = a.y - d.y;
  Scalar bdx = b.x - d.x, bdy = b.y - d.y;
  Scalar cdx = c.x - d.x, cdy = c.y - d.y;
  Scalar alift = adx * adx + ady * ady;
  Scalar blift = bdx * bdx + bdy * bdy;
  Scalar clift = cdx * cdx + cdy * cdy;
  Scalar det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
               clift * (adx * bdy - bdx * ady);
  return sign(det);
}

CirclePosition in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
  Orientation o = orientation(a, b, c);
  if (o == Orientation::Collinear) {
    throw Error(ErrorCode::CollinearDefiningPoints, "in_circle needs three non-collinear points");
  }
  int s = in_circle_det_sign(a, b, c, d) * static_cast<int>(o);
  if (s > 0) return CirclePosition::Inside;
  if (s < 0) return CirclePosition::Outside;
  return CirclePosition::On;
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
  Scalar d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (sign(d) == 0) {
    throw Error(ErrorCode::CollinearDefiningPoints, "circumcenter of collinear points");
  }
  Scalar la = a.x * a.x + a.y * a.y;
  Scalar lb = b.x * b.x + b.y * b.y;
  Scalar lc = c.x * c.x + c.y * c.y;
  Scalar ux = (la * (b.y - c.y) + lb * (c.y - a.y) + lc * (a.y - b.y)) / d;
  Scalar uy = (la * (c.x - b.x) + lb * (a.x - c.x) + lc * (b.x - a.x)) / d;
  return {ux, uy};
}

HalfPlane bisector_halfplane(const Point& own, const Point& other) {
  if (own == other) {
    throw Error(ErrorCode::CoincidentSites, "bisector of coincident sites");
  }
  // |x - own|^2 <= |x - other|^2  <=>  2 x.(other - own) <= |other|^2 - |own|^2
  Scalar a = other.x - own.x;
  Scalar b = other.y - own.y;
  Scalar c = (other.x * other.x + other.y * other.y - own.x * own.x - own.y * own.y) / 2;
  return {a, b, c};
}

bool strictly_between(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return sign(dot(p - a, b - a)) > 0 && sign(dot(p - b, a - b)) > 0;
}

namespace {

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
  return p == a || p == b || strictly_between(a, b, p);
}

}  // namespace

bool segments_cross(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
  auto shared = [&](const Point& p) {
    return (p == p1 || p == q1) && (p == p2 || p == q2);
  };
  Orientation o1 = orientation(p1, q1, p2);
  Orientation o2 = orientation(p1, q1, q2);
  Orientation o3 = orientation(p2, q2, p1);
  Orientation o4 = orientation(p2, q2, q1);
  if (o1 != Orientation::Collinear && o2 != Orientation::Collinear && o1 != o2 &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear && o3 != o4) {
    return true;
  }
  // Touching or overlapping cases: any contact point that is not a shared endpoint.
  if (o1 == Orientation::Collinear && on_closed_segment(p1, q1, p2) && !shared(p2)) return true;
  if (o2 == Orientation::Collinear && on_closed_segment(p1, q1, q2) && !shared(q2)) return true;
  if (o3 == Orientation::Collinear && on_closed_segment(p2, q2, p1) && !shared(p1)) return true;
  if (o4 == Orientation::Collinear && on_closed_segment(p2, q2, q1) && !shared(q1)) return true;
  return false;
}

}  // namespace greedy
