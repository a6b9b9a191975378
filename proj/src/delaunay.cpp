#include "greedy/delaunay.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace greedy {

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::NotDelaunay: return "NotDelaunay";
    case EdgeClass::Degenerate: return "Degenerate";
    case EdgeClass::NonDegenerate: return "NonDegenerate";
  }
  return "?";
}

Triangulation::Triangulation(SiteSet sites, std::vector<Triangle> triangles)
    : sites_(std::move(sites)), triangles_(std::move(triangles)), vertex_triangles_(sites_.size()) {
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& v = triangles_[t].v;
    for (int k = 0; k < 3; ++k) {
      edge_triangles_[make_edge(v[k], v[(k + 1) % 3])].push_back(t);
      vertex_triangles_[v[k]].push_back(t);
    }
  }
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_triangles_.size());
  for (const auto& [e, tris] : edge_triangles_) out.push_back(e);
  return out;
}

std::vector<std::size_t> Triangulation::incident_triangles(SiteId i, SiteId j) const {
  auto it = edge_triangles_.find(make_edge(i, j));
  if (it == edge_triangles_.end()) return {};
  return it->second;
}

namespace {

constexpr SiteId kGhost = std::numeric_limits<SiteId>::max();

// Finite triangles are counter-clockwise. A ghost triangle (a, b, kGhost)
// stands for the unbounded region beyond hull edge a->b, which has the
// outside of the hull on its left.
struct WorkTriangle {
  std::array<SiteId, 3> v;
  bool ghost() const { return v[2] == kGhost; }
};

bool in_conflict(const SiteSet& s, const WorkTriangle& t, const Point& p) {
  if (t.ghost()) {
    const Point& a = s[t.v[0]];
    const Point& b = s[t.v[1]];
    Orientation o = orientation(a, b, p);
    return o == Orientation::CCW || (o == Orientation::Collinear && strictly_between(a, b, p));
  }
  // On the circle counts as outside: cocircular ties are left alone.
  return in_circle_det_sign(s[t.v[0]], s[t.v[1]], s[t.v[2]], p) > 0;
}

WorkTriangle make_work_triangle(SiteId u, SiteId w, SiteId p) {
  if (u == kGhost) return {{w, p, kGhost}};
  if (w == kGhost) return {{p, u, kGhost}};
  return {{u, w, p}};
}

void insert_site(const SiteSet& s, std::vector<WorkTriangle>& tris, SiteId p) {
  const Point& point = s[p];
  std::vector<char> conflict(tris.size(), 0);
  std::set<std::pair<SiteId, SiteId>> cavity_edges;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    if (!in_conflict(s, tris[t], point)) continue;
    conflict[t] = 1;
    const auto& v = tris[t].v;
    for (int k = 0; k < 3; ++k) cavity_edges.emplace(v[k], v[(k + 1) % 3]);
  }

  std::vector<WorkTriangle> next;
  next.reserve(tris.size() + 2);
  std::vector<WorkTriangle> fresh;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    if (!conflict[t]) {
      next.push_back(tris[t]);
      continue;
    }
    const auto& v = tris[t].v;
    for (int k = 0; k < 3; ++k) {
      SiteId u = v[k];
      SiteId w = v[(k + 1) % 3];
      if (!cavity_edges.contains({w, u})) fresh.push_back(make_work_triangle(u, w, p));
    }
  }
  next.insert(next.end(), fresh.begin(), fresh.end());
  tris = std::move(next);
}

}  // namespace

Triangulation triangulate(const SiteSet& sites) {
  const std::size_t n = sites.size();
  if (n < 3) throw Error(ErrorCode::TooFewSites, "triangulation needs at least 3 sites");

  SiteId third = 2;
  while (third < n && orientation(sites[0], sites[1], sites[third]) == Orientation::Collinear) {
    ++third;
  }
  if (third == n) throw Error(ErrorCode::AllCollinear, "all sites are collinear");

  SiteId a = 0, b = 1, c = third;
  if (orientation(sites[a], sites[b], sites[c]) == Orientation::CW) std::swap(a, b);
  std::vector<WorkTriangle> tris = {
      {{a, b, c}}, {{b, a, kGhost}}, {{c, b, kGhost}}, {{a, c, kGhost}}};

  for (SiteId p = 2; p < n; ++p) {
    if (p != third) insert_site(sites, tris, p);
  }

  std::vector<Triangle> finite;
  for (const auto& t : tris) {
    if (!t.ghost()) finite.push_back({t.v});
  }
  return Triangulation(sites, std::move(finite));
}

EdgeClass classify_edge(const Triangulation& t, SiteId i, SiteId j) {
  auto incident = t.incident_triangles(i, j);
  if (incident.empty()) {
    throw Error(ErrorCode::NotAnEdge,
                "(" + std::to_string(i) + ", " + std::to_string(j) + ") is not a triangulation edge");
  }
  // A hull edge's dual is an unbounded ray.
  if (incident.size() == 1) return EdgeClass::NonDegenerate;

  const auto& first = t.triangles()[incident[0]].v;
  const auto& second = t.triangles()[incident[1]].v;
  SiteId opposite = second[0];
  for (SiteId v : second) {
    if (v != i && v != j) opposite = v;
  }
  const SiteSet& s = t.sites();
  int side = in_circle_det_sign(s[first[0]], s[first[1]], s[first[2]], s[opposite]);
  return side == 0 ? EdgeClass::Degenerate : EdgeClass::NonDegenerate;
}

EdgeClass classify_pair(const Triangulation& t, SiteId i, SiteId j) {
  if (t.has_edge(i, j)) return classify_edge(t, i, j);
  const SiteSet& s = t.sites();
  // Cells touching in a single point meet at the circumcenter of a triangle
  // whose circle passes through both sites; i is a vertex of one such triangle.
  for (std::size_t idx : t.triangles_at(i)) {
    const auto& v = t.triangles()[idx].v;
    if (in_circle_det_sign(s[v[0]], s[v[1]], s[v[2]], s[j]) == 0) return EdgeClass::Degenerate;
  }
  return EdgeClass::NotDelaunay;
}

bool all_collinear(const SiteSet& sites) {
  for (SiteId k = 2; k < sites.size(); ++k) {
    if (orientation(sites[0], sites[1], sites[k]) != Orientation::Collinear) return false;
  }
  return true;
}

GeometricGraph delaunay_graph(const SiteSet& sites) {
  const std::size_t n = sites.size();
  std::vector<Edge> edges;
  if (n >= 2 && all_collinear(sites)) {
    std::vector<SiteId> order(n);
    std::iota(order.begin(), order.end(), SiteId{0});
    Point axis = sites[1] - sites[0];
    std::vector<Scalar> key(n);
    for (SiteId k = 0; k < n; ++k) key[k] = dot(sites[k] - sites[0], axis);
    std::sort(order.begin(), order.end(), [&](SiteId p, SiteId q) { return key[p] < key[q]; });
    for (std::size_t k = 0; k + 1 < n; ++k) edges.push_back(make_edge(order[k], order[k + 1]));
  } else if (n >= 3) {
    Triangulation t = triangulate(sites);
    for (auto [i, j] : t.edges()) {
      if (classify_edge(t, i, j) == EdgeClass::NonDegenerate) edges.emplace_back(i, j);
    }
  }
  return GeometricGraph(sites, edges);
}

OracleResult edge_oracle(const SiteSet& sites, SiteId i, SiteId j) {
  if (i == j) throw Error(ErrorCode::CoincidentSites, "edge_oracle needs two different sites");
  const Point& vi = sites.at(i);
  const Point& vj = sites.at(j);
  const Point mid = midpoint(vi, vj);
  const Point u = perp(vj - vi);
  auto at = [&](const Scalar& t) { return mid + t * u; };

  // Points of the bisector are c(t) = mid + t*u; each other site bounds t on one side.
  std::optional<Scalar> lo, hi;
  bool empty = false;
  for (SiteId k = 0; k < sites.size() && !empty; ++k) {
    if (k == i || k == j) continue;
    HalfPlane h = bisector_halfplane(vi, sites[k]);
    Scalar alpha = dot(h.normal(), u);
    Scalar beta = h.c - dot(h.normal(), mid);
    if (sign(alpha) == 0) {
      empty = sign(beta) < 0;
      continue;
    }
    Scalar bound = beta / alpha;
    if (sign(alpha) > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else {
      if (!lo || bound > *lo) lo = bound;
    }
  }
  if (!empty && lo && hi && *lo > *hi) empty = true;

  OracleResult result{EdgeClass::NotDelaunay, {}};
  result.feature.direction = u;
  result.feature.anchor = mid;
  if (empty) return result;

  if (lo && hi && *lo == *hi) {
    result.edge_class = EdgeClass::Degenerate;
    result.feature.kind = SharedFeature::Kind::SinglePoint;
    result.feature.point = at(*lo);
    result.feature.anchor = *result.feature.point;
    return result;
  }
  result.edge_class = EdgeClass::NonDegenerate;
  result.feature.kind = SharedFeature::Kind::Segment;
  if (lo) result.feature.start = at(*lo);
  if (hi) result.feature.end = at(*hi);
  if (lo && hi) {
    result.feature.anchor = at((*lo + *hi) / 2);
  } else if (lo) {
    result.feature.anchor = *result.feature.start;
  } else if (hi) {
    result.feature.anchor = *result.feature.end;
  }
  return result;
}

Point shared_voronoi_midpoint(const SiteSet& sites, SiteId i, SiteId j) {
  OracleResult r = edge_oracle(sites, i, j);
  if (!r.feature.bounded()) {
    throw Error(ErrorCode::NotBoundedSegment, "cells of " + std::to_string(i) + " and " +
                                                  std::to_string(j) +
                                                  " do not share a bounded segment");
  }
  return midpoint(*r.feature.start, *r.feature.end);
}

}  // namespace greedy
