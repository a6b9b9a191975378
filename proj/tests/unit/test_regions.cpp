#include <doctest.h>

#include "fixtures.hpp"
#include "greedy/delaunay.hpp"
#include "greedy/regions.hpp"
#include "greedy/routing.hpp"

using namespace greedy;
using namespace fixtures;

namespace {

// The witness must be stuck-inducing: strictly inside VR_G(i) and strictly
// inside another site's cell. Checked by direct distance comparison.
void check_witness(const GeometricGraph& g, SiteId i, const EqualityVerdict& v) {
  REQUIRE(v.witness);
  const Point& x = *v.witness;
  const SiteSet& s = g.sites();
  Scalar own = dist_sq(x, s[i]);
  for (SiteId j : g.neighbors(i)) CHECK(own < dist_sq(x, s[j]));
  REQUIRE(v.blocking_site);
  CHECK(*v.blocking_site != i);
  for (SiteId k = 0; k < s.size(); ++k) {
    if (k != *v.blocking_site) CHECK(dist_sq(x, s[*v.blocking_site]) < dist_sq(x, s[k]));
  }
  CHECK_FALSE(greedy_next(g, i, x).has_value());
}

}  // namespace

TEST_CASE("voronoi_cell examples") {
  ConvexRegion cell = voronoi_cell(square(), 0);
  CHECK(cell.constraints.size() == 3);
  CHECK(cell.contains(P(1, 1)));
  CHECK(cell.contains(P(-100, 1)));
  CHECK_FALSE(cell.contains(P("1.01", "0")));
  CHECK_FALSE(cell.contains(P("0", "1.01")));
  RegionBoundary b = realize(cell);
  // Quadrant: one vertex at (1,1), the diagonal constraint is redundant.
  CHECK(b.vertices == std::vector<Point>{P(1, 1)});
  CHECK(b.edges.size() == 2);
  CHECK(b.unbounded_directions.size() == 2);

  ConvexRegion half = voronoi_cell(SiteSet({P(0, 0), P(2, 0)}), 0);
  CHECK(half.constraints.size() == 1);
  CHECK(half.constraints[0].same_set({1, 0, 1}));
  CHECK(realize(half).vertices.empty());

  ConvexRegion plane = voronoi_cell(SiteSet({P(3, 3)}), 0);
  CHECK(plane.constraints.empty());
  CHECK(realize(plane).whole_plane);
}

TEST_CASE("realize gives a closed counter-clockwise chain for bounded cells") {
  SiteSet s = random_sites(5, 30, 100);
  for (SiteId i = 0; i < s.size(); ++i) {
    RegionBoundary b = realize(voronoi_cell(s, i));
    if (!b.bounded()) continue;
    REQUIRE(b.edges.size() >= 3);
    for (std::size_t k = 0; k < b.edges.size(); ++k) {
      const auto& e = b.edges[k];
      const auto& next = b.edges[(k + 1) % b.edges.size()];
      CHECK(*e.end == *next.start);
      CHECK(orientation(*e.start, *e.end, s[i]) == Orientation::CCW);
    }
  }
}

TEST_CASE("vertex_region examples") {
  ConvexRegion full = vertex_region(square_sides(), 0);
  ConvexRegion cell = voronoi_cell(square(), 0);
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    Point x = random_rational_point(rng, -5, 7);
    CHECK(full.contains(x) == cell.contains(x));
  }

  ConvexRegion missing = vertex_region(square_missing_side(), 0);
  REQUIRE(missing.constraints.size() == 1);
  CHECK(missing.constraints[0].same_set({0, 1, 1}));
  CHECK(missing.contains(P(3, 0)));
  CHECK_FALSE(cell.contains(P(3, 0)));
}

TEST_CASE("regions_equal examples") {
  for (SiteId i = 0; i < 4; ++i) {
    EqualityVerdict v = regions_equal(square_sides(), i);
    CHECK(v.equal);
    CHECK_FALSE(v.witness);
    // The diagonal partner touches the cell only at the centre.
    CHECK(v.boundary_contacts == std::vector<SiteId>{(i + 2) % 4});
  }

  EqualityVerdict broken = regions_equal(square_missing_side(), 0);
  CHECK_FALSE(broken.equal);
  CHECK(*broken.blocking_site == 1);
  check_witness(square_missing_side(), 0, broken);
  // (3/2, 0) from the worked example lies in the same gap.
  CHECK(vertex_region(square_missing_side(), 0).contains(P("3/2", "0")));
  CHECK(dist_sq(P("3/2", "0"), P(2, 0)) < dist_sq(P("3/2", "0"), P(0, 0)));

  GeometricGraph complete = GeometricGraph::complete(random_sites(9, 12, 40));
  for (SiteId i = 0; i < complete.size(); ++i) CHECK(regions_equal(complete, i).equal);
}

TEST_CASE("witness_destination") {
  auto w = witness_destination(square_missing_side(), 0);
  REQUIRE(w);
  CHECK(vertex_region(square_missing_side(), 0).strictly_contains(*w));
  CHECK(nearest_site(square(), *w) == std::vector<SiteId>{1});

  GeometricGraph dg = delaunay_graph(random_sites(21, 15, 60));
  for (SiteId i = 0; i < dg.size(); ++i) CHECK_FALSE(witness_destination(dg, i));

  GeometricGraph isolated(SiteSet({P(0, 0), P(4, 0)}));
  auto lone = witness_destination(isolated, 0);
  REQUIRE(lone);
  CHECK(dist_sq(*lone, P(4, 0)) < dist_sq(*lone, P(0, 0)));
  CHECK(route(isolated, 0, *lone).kind == RouteOutcome::Kind::Stuck);
}

TEST_CASE("cell containment and partition on random points") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SiteSet s = random_sites(seed, 15, 40);
    GeometricGraph g = delaunay_graph(s);
    GeometricGraph sparse = g.without_edge(g.edges().front().first, g.edges().front().second);
    Rng rng(seed * 7);
    for (int k = 0; k < 100; ++k) {
      Point x = random_rational_point(rng, -5, 45);
      auto nearest = nearest_site(s, x);
      std::size_t strict = 0;
      for (SiteId i = 0; i < s.size(); ++i) {
        ConvexRegion cell = voronoi_cell(s, i);
        if (cell.contains(x)) {
          CHECK(vertex_region(sparse, i).contains(x));
          CHECK(vertex_region(g, i).contains(x));
        }
        if (cell.strictly_contains(x)) ++strict;
      }
      if (nearest.size() == 1) {
        CHECK(strict == 1);
        CHECK(voronoi_cell(s, nearest.front()).strictly_contains(x));
      }
    }
  }
}

TEST_CASE("regions_equal witnesses are sound on damaged graphs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SiteSet s = random_sites(seed, 18, 50);
    GeometricGraph dg = delaunay_graph(s);
    Rng rng(seed);
    auto edges = dg.edges();
    auto [a, b] = edges[rng.below(edges.size())];
    GeometricGraph g = dg.without_edge(a, b);
    bool any = false;
    for (SiteId i = 0; i < s.size(); ++i) {
      EqualityVerdict v = regions_equal(g, i);
      if (!v.equal) {
        any = true;
        check_witness(g, i, v);
      }
    }
    CHECK(any);
    CHECK_FALSE(regions_equal(g, a).equal);
    CHECK_FALSE(regions_equal(g, b).equal);
  }
}
