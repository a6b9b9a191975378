#pragma once

#include <string>
#include <vector>

#include "greedy/graph.hpp"
#include "greedy/rng.hpp"

namespace fixtures {

using greedy::Point;
using greedy::Scalar;

inline Scalar Q(const std::string& text) { return greedy::parse_scalar(text); }
inline Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }
inline Point P(const std::string& x, const std::string& y) { return {Q(x), Q(y)}; }

/// (0,0), (2,0), (2,2), (0,2): ids 0..3 counter-clockwise.
inline greedy::SiteSet square() { return greedy::SiteSet({P(0, 0), P(2, 0), P(2, 2), P(0, 2)}); }

inline greedy::GeometricGraph square_sides() {
  return greedy::GeometricGraph(square(), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

/// The canonical failing instance: square minus side (0,0)-(2,0).
inline greedy::GeometricGraph square_missing_side() {
  return greedy::GeometricGraph(square(), {{1, 2}, {2, 3}, {0, 3}});
}

/// Distinct integer points in [0, bound]^2.
inline greedy::SiteSet random_sites(std::uint64_t seed, std::size_t n, std::int64_t bound) {
  greedy::Rng rng(seed);
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p = P(rng.uniform(0, bound), rng.uniform(0, bound));
    bool dup = false;
    for (const auto& q : pts) dup = dup || q == p;
    if (!dup) pts.push_back(p);
  }
  return greedy::SiteSet(pts);
}

/// Random rational point with small denominators in [lo, hi]^2.
inline Point random_rational_point(greedy::Rng& rng, long lo, long hi) {
  long den = rng.uniform(1, 12);
  Scalar x(rng.uniform(lo * den, hi * den), den);
  Scalar y(rng.uniform(lo * den, hi * den), den);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

}  // namespace fixtures
