#pragma once

#include <optional>
#include <vector>

#include "greedy/graph.hpp"

namespace greedy {

struct RouteOutcome {
  enum class Kind { Delivered, Stuck };
  Kind kind = Kind::Stuck;
  std::vector<SiteId> path;  // source first, terminal node last
  Point destination;

  bool delivered() const { return kind == Kind::Delivered; }
  SiteId terminal() const { return path.back(); }
  std::size_t hops() const { return path.size() - 1; }
};

const char* to_string(RouteOutcome::Kind kind);

/// The neighbor strictly closer to dest than `current` that is closest to
/// dest (lowest id on ties); nothing at a local minimum.
std::optional<SiteId> greedy_next(const GeometricGraph& g, SiteId current, const Point& dest);

/// Forwards greedily from source until no neighbor is closer. Delivered iff
/// the terminal node is one of the sites nearest to dest.
RouteOutcome route(const GeometricGraph& g, SiteId source, const Point& dest);

/// All sites at minimum distance from dest, ascending.
std::vector<SiteId> nearest_site(const SiteSet& sites, const Point& dest);

bool is_nearest(const SiteSet& sites, SiteId id, const Point& dest);

}  // namespace greedy
