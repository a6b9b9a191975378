#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greedy/graph.hpp"
#include "greedy/regions.hpp"
#include "greedy/routing.hpp"

namespace greedy::harness {

struct Box {
  Scalar min_x, min_y, max_x, max_y;
};

struct RenderLayers {
  bool voronoi = true;   // dash-dot
  bool delaunay = true;  // solid, non-degenerate edges only
  std::optional<GeometricGraph> graph;  // solid, drawn in its own colour
  /// Dashed boundary of this site's vertex region in `graph` (or in the
  /// Delaunay graph when no graph is given).
  std::optional<SiteId> vertex_region;
  std::optional<RouteOutcome> route;
};

/// Bounding box of the sites, the Voronoi vertices and any extra points,
/// widened by 10% of its size on every side (by 1 along a zero-size axis).
Box rendering_box(const SiteSet& sites, const std::vector<Point>& extra = {});

/// The region cut down to the box, as a counter-clockwise polygon.
std::vector<Point> clip_region(const ConvexRegion& region, const Box& box);

/// Deterministic SVG document. Throws InvalidSiteId for bad layer ids.
std::string render_svg(const SiteSet& sites, const RenderLayers& layers);

/// Writes render_svg(...) to path. Throws IoError.
void render_svg(const SiteSet& sites, const RenderLayers& layers, const std::string& path);

}  // namespace greedy::harness
