#include "greedy/routing.hpp"

namespace greedy {

const char* to_string(RouteOutcome::Kind kind) {
  return kind == RouteOutcome::Kind::Delivered ? "Delivered" : "Stuck";
}

namespace {

// Sign of dist(k, dest) - dist(l, dest).
int compare(const SiteSet& s, SiteId k, SiteId l, const Point& dest, const Approx& ad) {
  return compare_distance(s[k], s.approx(k), s[l], s.approx(l), dest, ad);
}

std::optional<SiteId> next_hop(const GeometricGraph& g, SiteId current, const Point& dest,
                               const Approx& ad) {
  const SiteSet& s = g.sites();
  SiteId best = current;
  // Neighbors are sorted, so a strict comparison keeps the lowest id on ties.
  for (SiteId k : g.neighbors(current)) {
    if (compare(s, k, best, dest, ad) < 0) best = k;
  }
  if (best == current) return std::nullopt;
  return best;
}

bool nearest(const SiteSet& s, SiteId id, const Point& dest, const Approx& ad) {
  for (SiteId k = 0; k < s.size(); ++k) {
    if (compare(s, k, id, dest, ad) < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<SiteId> greedy_next(const GeometricGraph& g, SiteId current, const Point& dest) {
  g.sites().at(current);
  return next_hop(g, current, dest, approx(dest));
}

RouteOutcome route(const GeometricGraph& g, SiteId source, const Point& dest) {
  g.sites().at(source);
  const Approx ad = approx(dest);
  RouteOutcome out;
  out.destination = dest;
  out.path.push_back(source);
  SiteId current = source;
  while (auto next = next_hop(g, current, dest, ad)) {
    current = *next;
    out.path.push_back(current);
  }
  out.kind = nearest(g.sites(), current, dest, ad) ? RouteOutcome::Kind::Delivered
                                                   : RouteOutcome::Kind::Stuck;
  return out;
}

std::vector<SiteId> nearest_site(const SiteSet& sites, const Point& dest) {
  const Approx ad = approx(dest);
  std::vector<SiteId> out{0};
  for (SiteId k = 1; k < sites.size(); ++k) {
    int c = compare(sites, k, out.front(), dest, ad);
    if (c < 0) {
      out.assign(1, k);
    } else if (c == 0) {
      out.push_back(k);
    }
  }
  return out;
}

bool is_nearest(const SiteSet& sites, SiteId id, const Point& dest) {
  sites.at(id);
  return nearest(sites, id, dest, approx(dest));
}

}  // namespace greedy
