#include "greedy/regions.hpp"

#include <algorithm>

#include "greedy/routing.hpp"

namespace greedy {

bool ConvexRegion::contains(const Point& p) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& h) { return h.contains(p); });
}

bool ConvexRegion::strictly_contains(const Point& p) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& h) { return h.strictly_contains(p); });
}

ConvexRegion voronoi_cell(const SiteSet& sites, SiteId i) {
  ConvexRegion r;
  r.base_site = i;
  r.base_point = sites.at(i);
  for (SiteId k = 0; k < sites.size(); ++k) {
    if (k == i) continue;
    r.competitors.push_back(k);
    r.constraints.push_back(bisector_halfplane(r.base_point, sites[k]));
  }
  return r;
}

ConvexRegion vertex_region(const GeometricGraph& g, SiteId i) {
  ConvexRegion r;
  r.base_site = i;
  r.base_point = g.sites().at(i);
  for (SiteId k : g.neighbors(i)) {
    r.competitors.push_back(k);
    r.constraints.push_back(bisector_halfplane(r.base_point, g.site(k)));
  }
  return r;
}

RegionBoundary realize(const ConvexRegion& region) {
  RegionBoundary out;
  const auto& hs = region.constraints;
  if (hs.empty()) {
    out.whole_plane = true;
    return out;
  }

  std::vector<BoundaryEdge> edges;
  for (std::size_t e = 0; e < hs.size(); ++e) {
    const HalfPlane& h = hs[e];
    Point n = h.normal();
    // Traversing along perp(n) keeps the region (the -n side) on the left.
    Point d = perp(n);
    Point q = (h.c / dot(n, n)) * n;

    std::optional<Scalar> lo, hi;
    bool empty = false;
    for (std::size_t g = 0; g < hs.size() && !empty; ++g) {
      if (g == e) continue;
      Scalar alpha = dot(hs[g].normal(), d);
      Scalar beta = hs[g].c - dot(hs[g].normal(), q);
      if (sign(alpha) == 0) {
        // Parallel. Identical constraints keep only the first as an edge.
        if (sign(beta) < 0 || (sign(beta) == 0 && g < e)) empty = true;
        continue;
      }
      Scalar bound = beta / alpha;
      if (sign(alpha) > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (empty || (lo && hi && *lo >= *hi)) continue;

    BoundaryEdge edge;
    edge.constraint = e;
    edge.direction = d;
    if (lo) edge.start = q + *lo * d;
    if (hi) edge.end = q + *hi * d;
    edge.anchor = edge.start ? *edge.start : edge.end ? *edge.end : q;
    edges.push_back(std::move(edge));
  }

  // Chain edges counter-clockwise, starting from an edge with an unbounded start if any.
  std::size_t first = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!edges[k].start) {
      first = k;
      break;
    }
  }
  std::vector<char> used(edges.size(), 0);
  std::size_t current = first;
  while (current < edges.size() && !used[current]) {
    used[current] = 1;
    out.edges.push_back(edges[current]);
    const auto& end = edges[current].end;
    std::size_t next = edges.size();
    if (end) {
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (!used[k] && edges[k].start && *edges[k].start == *end) {
          next = k;
          break;
        }
      }
    }
    current = next;
  }
  // Parallel full lines (strips) do not chain; append the rest in index order.
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!used[k]) out.edges.push_back(edges[k]);
  }

  for (const auto& edge : out.edges) {
    if (edge.start &&
        std::find(out.vertices.begin(), out.vertices.end(), *edge.start) == out.vertices.end()) {
      out.vertices.push_back(*edge.start);
    }
    if (edge.end &&
        std::find(out.vertices.begin(), out.vertices.end(), *edge.end) == out.vertices.end()) {
      out.vertices.push_back(*edge.end);
    }
    if (!edge.start) out.unbounded_directions.push_back(Scalar(-1) * edge.direction);
    if (!edge.end) out.unbounded_directions.push_back(edge.direction);
  }
  return out;
}

namespace {

// Generators of the recession cone { d : n_h . d <= 0 for all h } of a
// nonempty constraint set. In the plane every extreme ray lies along some
// boundary direction; a half-plane cone additionally needs an inward normal.
std::vector<Point> recession_generators(const std::vector<HalfPlane>& hs) {
  std::vector<Point> candidates;
  for (const auto& h : hs) {
    Point d = perp(h.normal());
    candidates.push_back(d);
    candidates.push_back(Scalar(-1) * d);
    candidates.push_back(Scalar(-1) * h.normal());
  }
  std::vector<Point> out;
  for (const auto& d : candidates) {
    bool inside = std::all_of(hs.begin(), hs.end(),
                              [&](const HalfPlane& h) { return sign(dot(h.normal(), d)) <= 0; });
    if (inside && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

// Moves an interior witness towards its nearest other site until that site
// is the unique nearest one.
Point isolate_nearest(const SiteSet& sites, const ConvexRegion& vr, Point x) {
  auto nearest = nearest_site(sites, x);
  if (nearest.size() == 1) return x;
  SiteId target = nearest.front();
  Scalar step(1, 2);
  for (;;) {
    Point y = x + step * (sites[target] - x);
    if (vr.strictly_contains(y)) {
      auto again = nearest_site(sites, y);
      if (again.size() == 1 && again.front() == target) return y;
    }
    step /= 2;
  }
}

}  // namespace

EqualityVerdict regions_equal(const GeometricGraph& g, SiteId i) {
  const SiteSet& sites = g.sites();
  const Point& vi = sites.at(i);
  ConvexRegion vr = vertex_region(g, i);
  RegionBoundary boundary = realize(vr);

  // The supremum of a linear function over the region is either unbounded
  // along a recession direction or attained at a vertex or on a full edge line.
  std::vector<Point> probes = boundary.vertices;
  for (const auto& edge : boundary.edges) {
    if (!edge.start && !edge.end) probes.push_back(edge.anchor);
  }
  std::vector<Point> directions;
  if (!boundary.whole_plane) directions = recession_generators(vr.constraints);

  EqualityVerdict verdict;
  const auto& nbrs = g.neighbors(i);
  for (SiteId k = 0; k < sites.size(); ++k) {
    if (k == i || std::binary_search(nbrs.begin(), nbrs.end(), k)) continue;
    HalfPlane hk = bisector_halfplane(vi, sites[k]);

    std::optional<Point> witness;
    bool touches = false;
    // v_i sits strictly inside hk, so its slack is negative.
    Scalar base_slack = hk.slack(vi);
    auto ray_witness = [&](const Point& d) {
      Scalar rate = dot(hk.normal(), d);
      // slack(v_i + t d) = base_slack + t * rate; t = -2 * base_slack / rate gives -base_slack > 0.
      Scalar t = Scalar(-2) * base_slack / rate;
      return vi + t * d;
    };
    if (boundary.whole_plane) {
      witness = ray_witness(hk.normal());
    } else {
      for (const auto& d : directions) {
        if (sign(dot(hk.normal(), d)) > 0) {
          witness = ray_witness(d);
          break;
        }
      }
    }
    if (!witness) {
      for (const auto& p : probes) {
        Scalar s = hk.slack(p);
        if (sign(s) > 0) {
          // Pull towards v_i (interior) while staying strictly past hk.
          Scalar eps = s / (2 * (s - base_slack));
          witness = p + eps * (vi - p);
          break;
        }
        if (sign(s) == 0) touches = true;
      }
    }

    if (witness) {
      if (verdict.equal) {
        verdict.equal = false;
        verdict.violated_by = k;
        Point x = isolate_nearest(sites, vr, *witness);
        verdict.witness = x;
        verdict.blocking_site = nearest_site(sites, x).front();
      }
    } else if (touches) {
      verdict.boundary_contacts.push_back(k);
    }
  }
  return verdict;
}

std::optional<Point> witness_destination(const GeometricGraph& g, SiteId i) {
  return regions_equal(g, i).witness;
}

}  // namespace greedy
