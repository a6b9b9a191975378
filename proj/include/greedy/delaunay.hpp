#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "greedy/graph.hpp"

namespace greedy {

enum class EdgeClass { NotDelaunay, Degenerate, NonDegenerate };

const char* to_string(EdgeClass c);

/// Counter-clockwise triple of site ids.
struct Triangle {
  std::array<SiteId, 3> v;
};

/// A Delaunay triangulation of a site set. When four or more sites are
/// cocircular the triangulation is one arbitrary valid choice; only the
/// non-degenerate edge set is canonical.
class Triangulation {
 public:
  Triangulation(SiteSet sites, std::vector<Triangle> triangles);

  const SiteSet& sites() const { return sites_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  /// Sorted edge list.
  std::vector<Edge> edges() const;
  bool has_edge(SiteId i, SiteId j) const { return edge_triangles_.count(make_edge(i, j)) != 0; }
  /// One index for a hull edge, two for an interior edge; empty if not an edge.
  std::vector<std::size_t> incident_triangles(SiteId i, SiteId j) const;
  const std::vector<std::size_t>& triangles_at(SiteId v) const { return vertex_triangles_[v]; }

 private:
  SiteSet sites_;
  std::vector<Triangle> triangles_;
  std::map<Edge, std::vector<std::size_t>> edge_triangles_;
  std::vector<std::vector<std::size_t>> vertex_triangles_;
};

/// Incremental Bowyer-Watson with exact predicates. Sites are inserted in id
/// order; cocircular ties are never flipped.
/// Throws TooFewSites (n < 3) or AllCollinear.
Triangulation triangulate(const SiteSet& sites);

/// Throws NotAnEdge if (i, j) is not an edge of t.
EdgeClass classify_edge(const Triangulation& t, SiteId i, SiteId j);

/// Three-way classification of any pair using the triangulation: non-edges
/// are Degenerate when some triangle at i has a circumcircle through j.
EdgeClass classify_pair(const Triangulation& t, SiteId i, SiteId j);

bool all_collinear(const SiteSet& sites);

/// Graph of all non-degenerate Delaunay edges. Collinear inputs give the path
/// through consecutive sites along the line.
GeometricGraph delaunay_graph(const SiteSet& sites);

/// What two closed Voronoi cells have in common. For a segment, `start` and
/// `end` are the finite endpoints (absent when that end is unbounded); the
/// feature runs from start towards end along `direction`, and `anchor` lies
/// on it.
struct SharedFeature {
  enum class Kind { Empty, SinglePoint, Segment };
  Kind kind = Kind::Empty;
  std::optional<Point> point;
  std::optional<Point> start;
  std::optional<Point> end;
  Point anchor;
  Point direction;

  bool bounded() const { return kind == Kind::Segment && start && end; }
};

struct OracleResult {
  EdgeClass edge_class;
  SharedFeature feature;
};

/// Brute-force classification straight from the cell-adjacency definition:
/// intersects the other sites' constraints along the bisector of (i, j).
/// O(n); independent of triangulate. Throws CoincidentSites when i == j.
OracleResult edge_oracle(const SiteSet& sites, SiteId i, SiteId j);

/// Midpoint of the bounded segment the two cells share. The point is
/// equidistant from sites i and j and strictly farther from every other site.
/// Throws NotBoundedSegment for rays, lines, single points or empty features.
Point shared_voronoi_midpoint(const SiteSet& sites, SiteId i, SiteId j);

}  // namespace greedy
