#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "greedy/delaunay.hpp"
#include "greedy/harness/generate.hpp"

using namespace greedy;
using namespace fixtures;

namespace {

void check_valid_triangulation(const Triangulation& t) {
  const SiteSet& s = t.sites();
  for (const auto& tri : t.triangles()) {
    REQUIRE(orientation(s[tri.v[0]], s[tri.v[1]], s[tri.v[2]]) == Orientation::CCW);
    for (SiteId d = 0; d < s.size(); ++d) {
      CHECK(in_circle(s[tri.v[0]], s[tri.v[1]], s[tri.v[2]], s[d]) != CirclePosition::Inside);
    }
  }
  // Every edge has one or two triangles; no two edges cross.
  auto edges = t.edges();
  for (auto [i, j] : edges) {
    auto inc = t.incident_triangles(i, j);
    CHECK(inc.size() >= 1);
    CHECK(inc.size() <= 2);
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      CHECK_FALSE(segments_cross(s[edges[a].first], s[edges[a].second], s[edges[b].first],
                                 s[edges[b].second]));
    }
  }
  // Euler: triangles = 2n - 2 - h, edges = 3n - 3 - h, h = number of hull edges.
  std::size_t hull = 0;
  for (auto [i, j] : edges) hull += t.incident_triangles(i, j).size() == 1 ? 1 : 0;
  CHECK(t.triangles().size() == 2 * s.size() - 2 - hull);
  CHECK(edges.size() == 3 * s.size() - 3 - hull);
}

SiteSet with_cocircular_block(std::uint64_t seed, std::size_t n) {
  // Random sites plus an empty 2x2 block of a lattice: four cocircular corners.
  Rng rng(seed);
  std::vector<Point> pts;
  long cx = rng.uniform(20, 80), cy = rng.uniform(20, 80);
  long w = rng.uniform(1, 5), h = rng.uniform(1, 5);
  pts = {P(cx, cy), P(cx + w, cy), P(cx + w, cy + h), P(cx, cy + h)};
  while (pts.size() < n) {
    Point p = P(rng.uniform(0, 100), rng.uniform(0, 100));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return SiteSet(pts);
}

}  // namespace

TEST_CASE("SiteSet rejects duplicates and empty input") {
  CHECK_THROWS_AS(SiteSet({}), Error);
  try {
    SiteSet({P(0, 0), P(1, 1), P(0, 0)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateSite);
  }
}

TEST_CASE("triangulate: small cases") {
  Triangulation one = triangulate(SiteSet({P(0, 0), P(4, 0), P(0, 4)}));
  CHECK(one.triangles().size() == 1);
  CHECK(one.edges().size() == 3);
  for (auto [i, j] : one.edges()) CHECK(classify_edge(one, i, j) == EdgeClass::NonDegenerate);

  Triangulation sq = triangulate(square());
  CHECK(sq.triangles().size() == 2);
  CHECK(sq.edges().size() == 5);
  check_valid_triangulation(sq);
  CHECK(classify_edge(sq, 0, 1) == EdgeClass::NonDegenerate);
  for (auto [i, j] : sq.edges()) {
    bool diagonal = (i == 0 && j == 2) || (i == 1 && j == 3);
    CHECK(classify_edge(sq, i, j) == (diagonal ? EdgeClass::Degenerate : EdgeClass::NonDegenerate));
  }
  // The missing diagonal still touches at (1,1).
  bool has02 = sq.has_edge(0, 2);
  CHECK(classify_pair(sq, has02 ? 1 : 0, has02 ? 3 : 2) == EdgeClass::Degenerate);
}

TEST_CASE("triangulate: errors") {
  try {
    triangulate(SiteSet({P(0, 0), P(1, 1)}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewSites);
  }
  try {
    triangulate(SiteSet({P(0, 0), P(1, 1), P(3, 3), P(-2, -2)}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllCollinear);
  }
  Triangulation t = triangulate(square());
  Edge absent = t.has_edge(0, 2) ? Edge{1, 3} : Edge{0, 2};
  try {
    classify_edge(t, absent.first, absent.second);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEdge);
  }
}

TEST_CASE("triangulate handles collinear prefixes and points on hull edges") {
  // First sites collinear; later sites land exactly on hull edges.
  SiteSet s({P(0, 0), P(2, 0), P(4, 0), P(6, 0), P(3, 5), P(1, 0), P(3, 0), P(0, 5), P(6, 5),
             P(3, 10)});
  Triangulation t = triangulate(s);
  check_valid_triangulation(t);
}

TEST_CASE("triangulate on lattices (heavy cocircularity)") {
  for (std::size_t n : {4u, 9u, 16u, 25u, 30u}) {
    harness::GeneratorSpec spec;
    spec.kind = harness::GeneratorKind::Lattice;
    spec.n = n;
    spec.bound = 12;
    SiteSet s = harness::generate(spec);
    Triangulation t = triangulate(s);
    check_valid_triangulation(t);
  }
}

TEST_CASE("delaunay_graph examples") {
  GeometricGraph sq = delaunay_graph(square());
  CHECK(sq.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  GeometricGraph line = delaunay_graph(SiteSet({P(0, 0), P(1, 0), P(3, 0)}));
  CHECK(line.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  GeometricGraph shuffled = delaunay_graph(SiteSet({P(3, 3), P(0, 0), P(2, 2), P(1, 1)}));
  CHECK(shuffled.edges() == std::vector<Edge>{{0, 2}, {1, 3}, {2, 3}});

  CHECK(delaunay_graph(SiteSet({P(5, 5)})).edge_count() == 0);
  CHECK(delaunay_graph(SiteSet({P(5, 5), P(1, 2)})).edges() == std::vector<Edge>{{0, 1}});

  // Twelve rational points on one circle: only the hull cycle survives.
  SiteSet circle(harness::rational_circle_points(12, P(0, 0), Scalar(5)));
  GeometricGraph ring = delaunay_graph(circle);
  CHECK(ring.edge_count() == 12);
  for (SiteId k = 0; k < 12; ++k) CHECK(ring.neighbors(k).size() == 2);
  for (SiteId i = 0; i < 12; ++i) {
    for (SiteId j = i + 1; j < 12; ++j) {
      EdgeClass expected = edge_oracle(circle, i, j).edge_class;
      CHECK(expected == (ring.has_edge(i, j) ? EdgeClass::NonDegenerate : EdgeClass::Degenerate));
    }
  }
}

TEST_CASE("edge_oracle examples") {
  SiteSet sq = square();
  OracleResult diag = edge_oracle(sq, 0, 2);
  CHECK(diag.edge_class == EdgeClass::Degenerate);
  REQUIRE(diag.feature.kind == SharedFeature::Kind::SinglePoint);
  CHECK(*diag.feature.point == P(1, 1));

  OracleResult side = edge_oracle(sq, 0, 1);
  CHECK(side.edge_class == EdgeClass::NonDegenerate);
  REQUIRE(side.feature.kind == SharedFeature::Kind::Segment);
  CHECK(side.feature.start.has_value() != side.feature.end.has_value());
  CHECK((side.feature.start ? *side.feature.start : *side.feature.end) == P(1, 1));

  // {(0,0),(2,0),(1,5)}: on x = 1 the third site only bounds y from above (y <= 12/5).
  OracleResult tri = edge_oracle(SiteSet({P(0, 0), P(2, 0), P(1, 5)}), 0, 1);
  CHECK(tri.edge_class == EdgeClass::NonDegenerate);
  Point end = tri.feature.start ? *tri.feature.start : *tri.feature.end;
  CHECK(end == P("1", "12/5"));

  CHECK(edge_oracle(SiteSet({P(0, 0), P(1, 0), P(3, 0)}), 0, 2).edge_class == EdgeClass::NotDelaunay);
  CHECK_THROWS_AS(edge_oracle(sq, 1, 1), Error);
}

TEST_CASE("shared_voronoi_midpoint") {
  SiteSet kite({P(0, 0), P(2, 0), P(1, 3), P(1, -3)});
  // Oracle: the shared segment joins the circumcenters of the two triangles on edge (0,1).
  Point c1 = circumcenter(kite[0], kite[1], kite[2]);
  Point c2 = circumcenter(kite[0], kite[1], kite[3]);
  CHECK(c1 == P("1", "4/3"));
  CHECK(c2 == P("1", "-4/3"));
  Point p = shared_voronoi_midpoint(kite, 0, 1);
  CHECK(p == midpoint(c1, c2));
  CHECK(p == P(1, 0));
  CHECK(dist_sq(p, kite[0]) == dist_sq(p, kite[1]));
  CHECK(dist_sq(p, kite[2]) > dist_sq(p, kite[0]));
  CHECK(dist_sq(p, kite[3]) > dist_sq(p, kite[0]));

  for (auto [i, j] : {Edge{0, 1}, Edge{0, 2}}) {
    try {
      shared_voronoi_midpoint(square(), i, j);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotBoundedSegment);
    }
  }
}

TEST_CASE("oracle equivalence on random and forced-cocircular instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SiteSet s = seed % 2 ? random_sites(seed, 20, 50) : with_cocircular_block(seed, 20);
    Triangulation t = triangulate(s);
    check_valid_triangulation(t);
    for (SiteId i = 0; i < s.size(); ++i) {
      for (SiteId j = i + 1; j < s.size(); ++j) {
        OracleResult r = edge_oracle(s, i, j);
        CHECK(classify_pair(t, i, j) == r.edge_class);
        if (t.has_edge(i, j)) CHECK(r.edge_class != EdgeClass::NotDelaunay);
      }
    }
  }
}

TEST_CASE("non-degenerate edges are the same under every insertion order") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    harness::GeneratorSpec spec;
    spec.kind = harness::GeneratorKind::Lattice;
    spec.n = 16;
    spec.bound = 6;
    SiteSet base = seed % 2 ? harness::generate(spec) : with_cocircular_block(seed, 15);
    GeometricGraph reference = delaunay_graph(base);

    std::vector<SiteId> order(base.size());
    std::iota(order.begin(), order.end(), SiteId{0});
    Rng rng(seed);
    std::set<Edge> common_all;
    for (int round = 0; round < 5; ++round) {
      for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
      std::vector<Point> pts;
      for (SiteId id : order) pts.push_back(base[id]);
      SiteSet permuted(pts);
      Triangulation t = triangulate(permuted);
      std::set<Edge> mapped;
      for (auto [i, j] : t.edges()) mapped.insert(make_edge(order[i], order[j]));
      // Every sure edge appears in every triangulation.
      for (auto e : reference.edges()) CHECK(mapped.count(e) == 1);
      GeometricGraph again = delaunay_graph(permuted);
      std::vector<Edge> back;
      for (auto [i, j] : again.edges()) back.push_back(make_edge(order[i], order[j]));
      std::sort(back.begin(), back.end());
      CHECK(back == reference.edges());
    }
  }
}

TEST_CASE("delaunay_graph is planar") {
  for (std::uint64_t seed = 40; seed < 46; ++seed) {
    SiteSet s = random_sites(seed, 25, 30);
    GeometricGraph g = delaunay_graph(s);
    auto edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        CHECK_FALSE(segments_cross(s[edges[a].first], s[edges[a].second], s[edges[b].first],
                                   s[edges[b].second]));
      }
    }
  }
}
