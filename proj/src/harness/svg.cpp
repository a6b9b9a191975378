#include "greedy/harness/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "greedy/delaunay.hpp"
#include "greedy/harness/io.hpp"

namespace greedy::harness {

namespace {

constexpr double kWidth = 800.0;

void grow(Box& box, const Point& p) {
  box.min_x = std::min(box.min_x, p.x);
  box.max_x = std::max(box.max_x, p.x);
  box.min_y = std::min(box.min_y, p.y);
  box.max_y = std::max(box.max_y, p.y);
}

std::vector<Point> voronoi_vertices(const SiteSet& sites) {
  std::vector<Point> out;
  if (sites.size() < 3 || all_collinear(sites)) return out;
  Triangulation t = triangulate(sites);
  for (const auto& tri : t.triangles()) {
    out.push_back(circumcenter(sites[tri.v[0]], sites[tri.v[1]], sites[tri.v[2]]));
  }
  return out;
}

// Clips {anchor + t*dir : t in [lo, hi]} (unbounded where absent) to the box.
std::optional<std::pair<Point, Point>> clip_line(const Point& anchor, const Point& dir,
                                                 std::optional<Scalar> lo,
                                                 std::optional<Scalar> hi, const Box& box) {
  auto limit = [&](const Scalar& p, const Scalar& q) {
    // Keep t with p * t <= q.
    if (sign(p) == 0) return sign(q) >= 0;
    Scalar t = q / p;
    if (sign(p) > 0) {
      if (!hi || t < *hi) hi = t;
    } else {
      if (!lo || t > *lo) lo = t;
    }
    return true;
  };
  bool ok = limit(-dir.x, anchor.x - box.min_x) && limit(dir.x, box.max_x - anchor.x) &&
            limit(-dir.y, anchor.y - box.min_y) && limit(dir.y, box.max_y - anchor.y);
  if (!ok || !lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(anchor + *lo * dir, anchor + *hi * dir);
}

class Canvas {
 public:
  explicit Canvas(const Box& box) : box_(box) {
    scale_ = kWidth / to_double(box.max_x - box.min_x);
    height_ = to_double(box.max_y - box.min_y) * scale_;
  }

  std::string x(const Point& p, double shift = 0.0) const {
    return num(to_double(p.x - box_.min_x) * scale_ + shift);
  }
  std::string y(const Point& p, double shift = 0.0) const {
    return num(to_double(box_.max_y - p.y) * scale_ + shift);
  }
  std::string xy(const Point& p) const { return x(p) + "," + y(p); }
  double height() const { return height_; }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }

 private:
  Box box_;
  double scale_ = 1.0;
  double height_ = 1.0;
};

}  // namespace

Box rendering_box(const SiteSet& sites, const std::vector<Point>& extra) {
  Box box{sites[0].x, sites[0].y, sites[0].x, sites[0].y};
  for (const auto& p : sites.points()) grow(box, p);
  for (const auto& p : voronoi_vertices(sites)) grow(box, p);
  for (const auto& p : extra) grow(box, p);
  auto widen = [](Scalar& lo, Scalar& hi) {
    Scalar margin = (hi - lo) / 10;
    if (sign(margin) == 0) margin = 1;
    lo -= margin;
    hi += margin;
  };
  widen(box.min_x, box.max_x);
  widen(box.min_y, box.max_y);
  return box;
}

std::vector<Point> clip_region(const ConvexRegion& region, const Box& box) {
  std::vector<Point> poly = {{box.min_x, box.min_y},
                             {box.max_x, box.min_y},
                             {box.max_x, box.max_y},
                             {box.min_x, box.max_y}};
  for (const auto& h : region.constraints) {
    std::vector<Point> next;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point& a = poly[k];
      const Point& b = poly[(k + 1) % poly.size()];
      Scalar sa = h.slack(a), sb = h.slack(b);
      if (sign(sa) <= 0) next.push_back(a);
      if ((sign(sa) < 0 && sign(sb) > 0) || (sign(sa) > 0 && sign(sb) < 0)) {
        next.push_back(a + (sa / (sa - sb)) * (b - a));
      }
    }
    poly = std::move(next);
    if (poly.empty()) break;
  }
  return poly;
}

std::string render_svg(const SiteSet& sites, const RenderLayers& layers) {
  std::optional<GeometricGraph> dg;
  auto delaunay = [&]() -> const GeometricGraph& {
    if (!dg) dg = delaunay_graph(sites);
    return *dg;
  };

  std::optional<ConvexRegion> region;
  std::vector<Point> extra;
  if (layers.vertex_region) {
    sites.at(*layers.vertex_region);
    region = vertex_region(layers.graph ? *layers.graph : delaunay(), *layers.vertex_region);
    for (const auto& v : realize(*region).vertices) extra.push_back(v);
  }
  if (layers.route) {
    for (SiteId id : layers.route->path) sites.at(id);
    extra.push_back(layers.route->destination);
  }
  const Box box = rendering_box(sites, extra);
  const Canvas canvas(box);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Canvas::num(kWidth)
      << "\" height=\"" << Canvas::num(canvas.height()) << "\" viewBox=\"0 0 "
      << Canvas::num(kWidth) << ' ' << Canvas::num(canvas.height()) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto line = [&](const Point& a, const Point& b, const char* style) {
    svg << "<line x1=\"" << canvas.x(a) << "\" y1=\"" << canvas.y(a) << "\" x2=\"" << canvas.x(b)
        << "\" y2=\"" << canvas.y(b) << "\" " << style << "/>\n";
  };

  if (layers.voronoi && sites.size() >= 2) {
    svg << "<g id=\"voronoi\">\n";
    for (auto [i, j] : delaunay().edges()) {
      OracleResult r = edge_oracle(sites, i, j);
      const auto& f = r.feature;
      if (f.kind != SharedFeature::Kind::Segment) continue;
      std::optional<Scalar> lo, hi;
      Scalar dd = dot(f.direction, f.direction);
      if (f.start) lo = dot(*f.start - f.anchor, f.direction) / dd;
      if (f.end) hi = dot(*f.end - f.anchor, f.direction) / dd;
      if (auto seg = clip_line(f.anchor, f.direction, lo, hi, box)) {
        line(seg->first, seg->second,
             "stroke=\"#1f4e9c\" stroke-width=\"1.5\" stroke-dasharray=\"10,4,2,4\"");
      }
    }
    svg << "</g>\n";
  }

  if (layers.delaunay) {
    svg << "<g id=\"delaunay\">\n";
    for (auto [i, j] : delaunay().edges()) {
      line(sites[i], sites[j], "stroke=\"black\" stroke-width=\"1.5\"");
    }
    svg << "</g>\n";
  }

  if (layers.graph) {
    svg << "<g id=\"graph\">\n";
    for (auto [i, j] : layers.graph->edges()) {
      line(sites.at(i), sites.at(j), "stroke=\"#2a7d2a\" stroke-width=\"2\"");
    }
    svg << "</g>\n";
  }

  if (region) {
    auto poly = clip_region(*region, box);
    svg << "<g id=\"vertex-region\">\n<polygon points=\"";
    for (std::size_t k = 0; k < poly.size(); ++k) svg << (k ? " " : "") << canvas.xy(poly[k]);
    svg << "\" fill=\"#c0392b\" fill-opacity=\"0.08\" stroke=\"#c0392b\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6,4\"/>\n</g>\n";
  }

  if (layers.route) {
    const auto& r = *layers.route;
    svg << "<g id=\"route\">\n<polyline points=\"";
    for (std::size_t k = 0; k < r.path.size(); ++k) svg << (k ? " " : "") << canvas.xy(sites[r.path[k]]);
    svg << "\" fill=\"none\" stroke=\"#e67e22\" stroke-width=\"3\"/>\n";
    const Point& d = r.destination;
    svg << "<path d=\"M " << canvas.x(d, -6) << ' ' << canvas.y(d) << " h 12 M " << canvas.x(d)
        << ' ' << canvas.y(d, -6) << " v 12\" stroke=\"#e67e22\" stroke-width=\"2\"/>\n";
    const char* ring = r.delivered() ? "#2a7d2a" : "#c0392b";
    svg << "<circle cx=\"" << canvas.x(sites[r.terminal()]) << "\" cy=\"" << canvas.y(sites[r.terminal()])
        << "\" r=\"9\" fill=\"none\" stroke=\"" << ring << "\" stroke-width=\"2\"/>\n";
    for (SiteId k : nearest_site(sites, d)) {
      svg << "<circle cx=\"" << canvas.x(sites[k]) << "\" cy=\"" << canvas.y(sites[k])
          << "\" r=\"12\" fill=\"none\" stroke=\"#2a7d2a\" stroke-width=\"1\" stroke-dasharray=\"3,2\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g id=\"sites\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (SiteId k = 0; k < sites.size(); ++k) {
    svg << "<circle cx=\"" << canvas.x(sites[k]) << "\" cy=\"" << canvas.y(sites[k])
        << "\" r=\"3.5\" fill=\"black\"/><text x=\"" << canvas.x(sites[k], 5)
        << "\" y=\"" << canvas.y(sites[k]) << "\">" << k << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void render_svg(const SiteSet& sites, const RenderLayers& layers, const std::string& path) {
  write_text_file(path, render_svg(sites, layers));
}

}  // namespace greedy::harness
