#include "greedy/harness/io.hpp"

#include <fstream>
#include <sstream>

namespace greedy::harness {

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  throw Error(ErrorCode::ParseError, "coordinate must be a string or an integer, got " + j.dump());
}

}  // namespace

json point_to_json(const Point& p) { return json::array({format_scalar(p.x), format_scalar(p.y)}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::ParseError, "point must be a two-element array, got " + j.dump());
  }
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

Point parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'x,y', got '" + text + "'");
  return {parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

json sites_to_json(const SiteSet& sites) {
  json pts = json::array();
  for (const auto& p : sites.points()) pts.push_back(point_to_json(p));
  return json{{"points", pts}};
}

json graph_to_json(const GeometricGraph& g) {
  json out = sites_to_json(g.sites());
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
  out["edges"] = edges;
  return out;
}

SiteSet sites_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"points\" array");
  }
  std::vector<Point> pts;
  for (const auto& p : j["points"]) pts.push_back(point_from_json(p));
  return SiteSet(std::move(pts));
}

GeometricGraph graph_from_json(const json& j) {
  SiteSet sites = sites_from_json(j);
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw Error(ErrorCode::ParseError, "edge must be [i, j] with nonnegative ids, got " + e.dump());
      }
      edges.emplace_back(e[0].get<SiteId>(), e[1].get<SiteId>());
    }
  }
  return GeometricGraph(std::move(sites), edges);
}

json route_to_json(const RouteOutcome& r) {
  return json{{"kind", to_string(r.kind)},
              {"destination", point_to_json(r.destination)},
              {"path", r.path},
              {"hops", r.hops()}};
}

json verdict_to_json(const SupportVerdict& v) {
  json missing = json::array();
  for (auto [i, j] : v.missing_edges) missing.push_back(json::array({i, j}));
  json out{{"supports", v.supports},
           {"method_edge_test", v.method_edge_test},
           {"method_region_test", v.method_region_test},
           {"missing_edges", missing},
           {"counterexample", nullptr}};
  if (v.counterexample) {
    out["counterexample"] = json{{"node", v.counterexample->node},
                                 {"destination", point_to_json(v.counterexample->destination)},
                                 {"trace", route_to_json(v.counterexample->trace)}};
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace greedy::harness
