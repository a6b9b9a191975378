#include "greedy/verifier.hpp"

#include <algorithm>

#include "greedy/batch.hpp"
#include "greedy/delaunay.hpp"
#include "greedy/regions.hpp"

namespace greedy {

SupportChecker::SupportChecker(const SiteSet& sites) : delaunay_(delaunay_graph(sites)) {}

SupportVerdict SupportChecker::check(const GeometricGraph& g) const {
  if (!(g.sites() == delaunay_.sites())) {
    throw Error(ErrorCode::InvalidGraph, "graph is over a different site set");
  }
  SupportVerdict v;
  for (auto [i, j] : delaunay_.edges()) {
    if (!g.has_edge(i, j)) v.missing_edges.emplace_back(i, j);
  }
  v.method_edge_test = v.missing_edges.empty();

  auto regions = batch::regions_equal_all(g);
  auto first_bad = std::find_if(regions.begin(), regions.end(),
                                [](const EqualityVerdict& r) { return !r.equal; });
  v.method_region_test = first_bad == regions.end();
  v.supports = v.method_edge_test && v.method_region_test;

  if (first_bad != regions.end()) {
    SiteId node = static_cast<SiteId>(first_bad - regions.begin());
    Point dest = *first_bad->witness;
    v.counterexample = Counterexample{node, dest, route(g, node, dest)};
  }
  return v;
}

bool SupportChecker::is_sparsest(const GeometricGraph& g) const {
  if (!check(g).supports) return false;
  for (auto [i, j] : g.edges()) {
    if (check(g.without_edge(i, j)).supports) return false;
  }
  return true;
}

SupportVerdict supports_greedy(const GeometricGraph& g) { return SupportChecker(g.sites()).check(g); }

bool is_sparsest_support(const GeometricGraph& g) { return SupportChecker(g.sites()).is_sparsest(g); }

CrossValidationReport cross_validate(const SiteSet& sites, std::size_t trials, std::uint64_t seed,
                                     std::size_t random_per_site) {
  SupportChecker checker(sites);
  const GeometricGraph& base = checker.delaunay();
  const std::size_t n = sites.size();

  CrossValidationReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    CrossValidationTrial trial;
    trial.index = t;
    trial.seed = mix_seed(seed, t);
    Rng rng(trial.seed);

    std::vector<Edge> edges = base.edges();
    if (t > 0) {
      std::size_t removals = std::min<std::size_t>(rng.below(3), edges.size());
      for (std::size_t r = 0; r < removals; ++r) {
        auto pick = rng.below(edges.size());
        trial.removed.push_back(edges[pick]);
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      std::size_t additions = rng.below(4);
      for (std::size_t a = 0; a < additions && n >= 2; ++a) {
        SiteId i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        Edge e = make_edge(i, j);
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        trial.added.push_back(e);
      }
    }
    GeometricGraph g(sites, edges);
    SupportVerdict verdict = checker.check(g);
    trial.supports = verdict.supports;
    trial.methods_agree = verdict.methods_agree();

    if (verdict.supports) {
      auto battery = batch::destination_battery(sites, random_per_site, rng);
      auto stats = batch::route_battery(g, battery);
      trial.routes = stats.routes;
      trial.delivered = stats.delivered;
      trial.ok = trial.methods_agree && stats.delivered == stats.routes;
    } else {
      const auto& ce = verdict.counterexample;
      trial.counterexample_valid = ce && !ce->trace.delivered() &&
                                   !is_nearest(sites, ce->trace.terminal(), ce->destination);
      trial.ok = trial.methods_agree && trial.counterexample_valid;
    }
    if (trial.methods_agree) ++report.agreements;
    report.all_ok = report.all_ok && trial.ok;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace greedy
