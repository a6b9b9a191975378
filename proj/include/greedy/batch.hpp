#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin under
// batch::reference that defines its result; tests require them to agree
// exactly and bench_batch compares their timings.

#include <span>
#include <vector>

#include "greedy/delaunay.hpp"
#include "greedy/regions.hpp"
#include "greedy/rng.hpp"
#include "greedy/routing.hpp"

namespace greedy::batch {

struct RouteFailure {
  SiteId source;
  std::size_t destination;  // index into the battery
  SiteId stuck_at;
  friend bool operator==(const RouteFailure&, const RouteFailure&) = default;
};

struct BatteryStats {
  std::size_t routes = 0;
  std::size_t delivered = 0;
  std::size_t total_hops = 0;
  std::size_t max_hops = 0;
  std::vector<RouteFailure> failures;  // ordered by (source, destination)

  double delivery_rate() const { return routes == 0 ? 1.0 : double(delivered) / double(routes); }
  double mean_hops() const { return routes == 0 ? 0.0 : double(total_hops) / double(routes); }
  friend bool operator==(const BatteryStats&, const BatteryStats&) = default;
};

struct PairClass {
  SiteId i;
  SiteId j;
  EdgeClass edge_class;
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Every site location plus `random_per_site * n` random rational points in
/// the sites' bounding box widened by 10%.
std::vector<Point> destination_battery(const SiteSet& sites, std::size_t random_per_site, Rng& rng);

/// Routes from every source to every destination.
BatteryStats route_battery(const GeometricGraph& g, std::span<const Point> destinations);

/// regions_equal for every site, indexed by site id.
std::vector<EqualityVerdict> regions_equal_all(const GeometricGraph& g);

/// edge_oracle classification of every pair i < j, in lexicographic order.
std::vector<PairClass> oracle_all_pairs(const SiteSet& sites);

namespace reference {

BatteryStats route_battery(const GeometricGraph& g, std::span<const Point> destinations);
std::vector<EqualityVerdict> regions_equal_all(const GeometricGraph& g);
std::vector<PairClass> oracle_all_pairs(const SiteSet& sites);

}  // namespace reference

}  // namespace greedy::batch
