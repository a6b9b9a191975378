#pragma once

#include <utility>
#include <vector>

#include "greedy/sites.hpp"

namespace greedy {

/// Undirected edge with first < second.
using Edge = std::pair<SiteId, SiteId>;

inline Edge make_edge(SiteId i, SiteId j) { return i < j ? Edge{i, j} : Edge{j, i}; }

/// Immutable site set plus symmetric adjacency; the routing substrate.
/// Neighbor lists are sorted ascending.
class GeometricGraph {
 public:
  explicit GeometricGraph(SiteSet sites) : GeometricGraph(std::move(sites), {}) {}
  /// Throws InvalidGraph on self-loops or out-of-range ids; duplicate edges collapse.
  GeometricGraph(SiteSet sites, const std::vector<Edge>& edges);

  static GeometricGraph complete(SiteSet sites);

  const SiteSet& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  const Point& site(SiteId id) const { return sites_[id]; }
  const std::vector<SiteId>& neighbors(SiteId id) const { return adjacency_[id]; }
  bool has_edge(SiteId i, SiteId j) const;
  /// Sorted list of edges (i < j).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  GeometricGraph with_edge(SiteId i, SiteId j) const;
  GeometricGraph without_edge(SiteId i, SiteId j) const;

  friend bool operator==(const GeometricGraph& g, const GeometricGraph& h) {
    return g.sites_ == h.sites_ && g.adjacency_ == h.adjacency_;
  }

 private:
  SiteSet sites_;
  std::vector<std::vector<SiteId>> adjacency_;
};

}  // namespace greedy
