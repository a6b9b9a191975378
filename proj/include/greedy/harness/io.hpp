#pragma once

#include <string>

#include <json.hpp>

#include "greedy/graph.hpp"
#include "greedy/routing.hpp"
#include "greedy/verifier.hpp"

namespace greedy::harness {

using nlohmann::json;

// Point-set file:  {"points": [["x", "y"], ...]}
// Graph file:      {"points": [...], "edges": [[i, j], ...]}   (i < j)
// Coordinates are strings holding an integer, a decimal or a fraction; they
// are read exactly. Plain JSON integers are accepted too; floats are not.

json point_to_json(const Point& p);
Point point_from_json(const json& j);
/// "x,y" with each part in any exact form.
Point parse_point(const std::string& text);

json sites_to_json(const SiteSet& sites);
json graph_to_json(const GeometricGraph& g);
SiteSet sites_from_json(const json& j);
/// Missing "edges" means no edges. Throws ParseError or InvalidGraph.
GeometricGraph graph_from_json(const json& j);

json route_to_json(const RouteOutcome& r);
json verdict_to_json(const SupportVerdict& v);

/// Throws IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
/// Throws IoError or ParseError.
json read_json_file(const std::string& path);

}  // namespace greedy::harness
