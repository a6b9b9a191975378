#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "greedy/graph.hpp"
#include "greedy/routing.hpp"

namespace greedy {

struct Counterexample {
  SiteId node;
  Point destination;
  RouteOutcome trace;
};

struct SupportVerdict {
  bool supports = false;
  /// Edge set contains every non-degenerate Delaunay edge.
  bool method_edge_test = false;
  /// Every vertex region equals its Voronoi cell.
  bool method_region_test = false;
  std::vector<Edge> missing_edges;
  std::optional<Counterexample> counterexample;

  bool methods_agree() const { return method_edge_test == method_region_test; }
};

/// Decides greedy support for graphs over one fixed site set; the Delaunay
/// graph is computed once and shared by every check.
class SupportChecker {
 public:
  explicit SupportChecker(const SiteSet& sites);

  const GeometricGraph& delaunay() const { return delaunay_; }

  /// Runs both the edge-containment and the region-equality test (never
  /// short-circuits). When support fails, the counterexample routes from the
  /// first violating site to its witness destination.
  /// Throws InvalidGraph if g is over a different site set.
  SupportVerdict check(const GeometricGraph& g) const;

  /// Supports greedy routing and every single-edge removal breaks support.
  bool is_sparsest(const GeometricGraph& g) const;

 private:
  GeometricGraph delaunay_;
};

SupportVerdict supports_greedy(const GeometricGraph& g);

bool is_sparsest_support(const GeometricGraph& g);

struct CrossValidationTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  bool supports = false;
  bool methods_agree = false;
  std::size_t routes = 0;
  std::size_t delivered = 0;
  /// Unsupported trials: the counterexample is Stuck at a non-nearest node.
  bool counterexample_valid = false;
  bool ok = false;
};

struct CrossValidationReport {
  std::vector<CrossValidationTrial> trials;
  std::size_t agreements = 0;
  bool all_ok = true;
};

/// Random edge removals/additions around the Delaunay graph. Trial 0 is the
/// Delaunay graph itself. Supported trials route every source to every site
/// location plus `random_per_site * n` random points and must deliver all.
CrossValidationReport cross_validate(const SiteSet& sites, std::size_t trials, std::uint64_t seed,
                                     std::size_t random_per_site = 4);

}  // namespace greedy
