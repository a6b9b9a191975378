#include "greedy/batch.hpp"

#include <algorithm>

namespace greedy::batch {

std::vector<Point> destination_battery(const SiteSet& sites, std::size_t random_per_site,
                                       Rng& rng) {
  std::vector<Point> out(sites.points().begin(), sites.points().end());
  Scalar min_x = sites[0].x, max_x = sites[0].x, min_y = sites[0].y, max_y = sites[0].y;
  for (const auto& p : sites.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  auto widen = [](const Scalar& lo, const Scalar& hi, mpz_class& out_lo, mpz_class& out_hi) {
    Scalar margin = (hi - lo) / 10;
    if (sign(margin) == 0) margin = 1;
    Scalar a = lo - margin, b = hi + margin;
    mpz_fdiv_q(out_lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_cdiv_q(out_hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  };
  mpz_class x_lo, x_hi, y_lo, y_hi;
  widen(min_x, max_x, x_lo, x_hi);
  widen(min_y, max_y, y_lo, y_hi);

  auto draw = [&](const mpz_class& lo, const mpz_class& hi, std::int64_t den) {
    std::int64_t a = lo.get_si() * den, b = hi.get_si() * den;
    Scalar v(mpz_class(rng.uniform(a, b)), mpz_class(den));
    v.canonicalize();
    return v;
  };
  const std::size_t count = random_per_site * sites.size();
  for (std::size_t k = 0; k < count; ++k) {
    auto den = rng.uniform(1, 1000);
    Scalar x = draw(x_lo, x_hi, den);
    Scalar y = draw(y_lo, y_hi, den);
    out.push_back({x, y});
  }
  return out;
}

namespace {

void route_from(const GeometricGraph& g, SiteId source, std::span<const Point> destinations,
                BatteryStats& stats) {
  for (std::size_t d = 0; d < destinations.size(); ++d) {
    RouteOutcome r = route(g, source, destinations[d]);
    ++stats.routes;
    stats.total_hops += r.hops();
    stats.max_hops = std::max(stats.max_hops, r.hops());
    if (r.delivered()) {
      ++stats.delivered;
    } else {
      stats.failures.push_back({source, d, r.terminal()});
    }
  }
}

BatteryStats merge(std::vector<BatteryStats>& per_source) {
  BatteryStats total;
  for (auto& s : per_source) {
    total.routes += s.routes;
    total.delivered += s.delivered;
    total.total_hops += s.total_hops;
    total.max_hops = std::max(total.max_hops, s.max_hops);
    total.failures.insert(total.failures.end(), s.failures.begin(), s.failures.end());
  }
  return total;
}

std::vector<std::pair<SiteId, SiteId>> all_pairs(std::size_t n) {
  std::vector<std::pair<SiteId, SiteId>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (SiteId i = 0; i < n; ++i) {
    for (SiteId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

BatteryStats route_battery(const GeometricGraph& g, std::span<const Point> destinations) {
  const auto n = static_cast<long>(g.size());
  std::vector<BatteryStats> per_source(g.size());
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < n; ++s) {
    route_from(g, static_cast<SiteId>(s), destinations, per_source[s]);
  }
  return merge(per_source);
}

std::vector<EqualityVerdict> regions_equal_all(const GeometricGraph& g) {
  const auto n = static_cast<long>(g.size());
  std::vector<EqualityVerdict> out(g.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = regions_equal(g, static_cast<SiteId>(i));
  return out;
}

std::vector<PairClass> oracle_all_pairs(const SiteSet& sites) {
  auto pairs = all_pairs(sites.size());
  std::vector<PairClass> out(pairs.size());
  const auto m = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < m; ++k) {
    auto [i, j] = pairs[k];
    out[k] = {i, j, edge_oracle(sites, i, j).edge_class};
  }
  return out;
}

namespace reference {

BatteryStats route_battery(const GeometricGraph& g, std::span<const Point> destinations) {
  BatteryStats stats;
  for (SiteId s = 0; s < g.size(); ++s) route_from(g, s, destinations, stats);
  return stats;
}

std::vector<EqualityVerdict> regions_equal_all(const GeometricGraph& g) {
  std::vector<EqualityVerdict> out;
  out.reserve(g.size());
  for (SiteId i = 0; i < g.size(); ++i) out.push_back(regions_equal(g, i));
  return out;
}

std::vector<PairClass> oracle_all_pairs(const SiteSet& sites) {
  std::vector<PairClass> out;
  for (auto [i, j] : all_pairs(sites.size())) {
    out.push_back({i, j, edge_oracle(sites, i, j).edge_class});
  }
  return out;
}

}  // namespace reference

}  // namespace greedy::batch
