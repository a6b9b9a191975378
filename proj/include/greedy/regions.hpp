#pragma once

#include <optional>
#include <vector>

#include "greedy/graph.hpp"

namespace greedy {

/// Intersection of bisector half-planes around a base site, one per competing
/// site. Always contains the base site strictly in its interior.
struct ConvexRegion {
  SiteId base_site = 0;
  Point base_point;
  std::vector<SiteId> competitors;
  std::vector<HalfPlane> constraints;  // constraints[k] comes from competitors[k]

  bool contains(const Point& p) const;
  bool strictly_contains(const Point& p) const;
};

/// One side of a realized region, lying on the boundary of constraints[constraint].
/// Runs from `start` to `end` along `direction`; a missing endpoint is unbounded.
struct BoundaryEdge {
  std::size_t constraint = 0;
  std::optional<Point> start;
  std::optional<Point> end;
  Point anchor;
  Point direction;
};

struct RegionBoundary {
  std::vector<BoundaryEdge> edges;       // counter-clockwise chain
  std::vector<Point> vertices;           // in edge order
  std::vector<Point> unbounded_directions;
  bool whole_plane = false;

  bool bounded() const { return !whole_plane && unbounded_directions.empty(); }
};

/// Exact realization of the region's boundary. O(m^2) in the number of constraints.
RegionBoundary realize(const ConvexRegion& region);

/// Points closer to site i than to any other site (closed cell).
ConvexRegion voronoi_cell(const SiteSet& sites, SiteId i);

/// Points closer to site i than to any of its graph neighbors.
ConvexRegion vertex_region(const GeometricGraph& g, SiteId i);

struct EqualityVerdict {
  bool equal = true;
  /// Present iff !equal: strictly inside the vertex region and strictly inside
  /// blocking_site's Voronoi cell.
  std::optional<Point> witness;
  std::optional<SiteId> blocking_site;
  /// Non-neighbor whose bisector cuts into the vertex region.
  std::optional<SiteId> violated_by;
  /// Non-neighbors whose cells touch the vertex region only on its boundary
  /// (degenerate contacts; they do not break equality).
  std::vector<SiteId> boundary_contacts;
};

/// Decides VR_G(i) == VC(i) exactly as a small linear feasibility problem.
EqualityVerdict regions_equal(const GeometricGraph& g, SiteId i);

/// A destination on which greedy forwarding from i is stuck while some other
/// site is strictly nearer; nothing when the vertex region equals the cell.
std::optional<Point> witness_destination(const GeometricGraph& g, SiteId i);

}  // namespace greedy
