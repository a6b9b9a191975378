// greedy: command-line front end for the greedy-routing verifier.
//
// Exit codes: 0 success, 1 `check` found no greedy support,
// 2 bad arguments/config/input, 3 experiment assertion failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "greedy/delaunay.hpp"
#include "greedy/harness/experiment.hpp"
#include "greedy/harness/generate.hpp"
#include "greedy/harness/io.hpp"
#include "greedy/harness/svg.hpp"
#include "greedy/routing.hpp"
#include "greedy/verifier.hpp"

using namespace greedy;
using namespace greedy::harness;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAssertion = 3;

struct Common {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool seed_given = false;
};

void emit(const Common& c, const std::string& content) {
  if (c.output.empty() || c.output == "-") {
    std::cout << content;
  } else {
    write_text_file(c.output, content);
  }
}

int cmd_triangulate(const Common& c) {
  SiteSet sites = sites_from_json(read_json_file(c.input));
  GeometricGraph dg = delaunay_graph(sites);
  if (c.format == "svg") {
    emit(c, render_svg(sites, RenderLayers{}));
    return 0;
  }

  std::vector<std::pair<Edge, EdgeClass>> classified;
  json triangles = json::array();
  if (sites.size() >= 3 && !all_collinear(sites)) {
    Triangulation t = triangulate(sites);
    for (auto [i, j] : t.edges()) classified.push_back({{i, j}, classify_edge(t, i, j)});
    for (const auto& tri : t.triangles()) triangles.push_back(tri.v);
  } else {
    for (auto e : dg.edges()) classified.push_back({e, EdgeClass::NonDegenerate});
  }

  if (c.format == "csv") {
    std::ostringstream os;
    os << "i,j,class\n";
    for (auto [e, cls] : classified) os << e.first << ',' << e.second << ',' << to_string(cls) << '\n';
    emit(c, os.str());
    return 0;
  }
  json out = graph_to_json(dg);
  json degenerate = json::array();
  for (auto [e, cls] : classified) {
    if (cls == EdgeClass::Degenerate) degenerate.push_back(json::array({e.first, e.second}));
  }
  out["degenerate_edges"] = degenerate;
  out["triangles"] = triangles;
  emit(c, out.dump(2) + "\n");
  return 0;
}

int cmd_check(const Common& c) {
  GeometricGraph g = graph_from_json(read_json_file(c.input));
  SupportVerdict v = supports_greedy(g);
  json out = verdict_to_json(v);
  out["sparsest"] = v.supports && SupportChecker(g.sites()).is_sparsest(g);
  emit(c, out.dump(2) + "\n");
  return v.supports ? 0 : kExitNegative;
}

int cmd_route(const Common& c, SiteId source, const std::string& dest) {
  GeometricGraph g = graph_from_json(read_json_file(c.input));
  g.sites().at(source);
  RouteOutcome r = route(g, source, parse_point(dest));
  if (c.format == "svg") {
    RenderLayers layers;
    layers.delaunay = false;
    layers.graph = g;
    layers.route = r;
    emit(c, render_svg(g.sites(), layers));
    return 0;
  }
  json out = route_to_json(r);
  out["nearest"] = nearest_site(g.sites(), r.destination);
  emit(c, out.dump(2) + "\n");
  return 0;
}

int cmd_experiment(const Common& c) {
  ExperimentConfig config = parse_experiment_config(read_json_file(c.input));
  if (c.seed_given) config.seed = c.seed;
  ExperimentReport report = run_experiment(config);
  if (c.output.empty() || c.output == "-") {
    std::cout << (c.format == "csv" ? report.csv : report.report.dump(2) + "\n");
  } else {
    std::filesystem::path csv_path(c.output);
    csv_path.replace_extension(".csv");
    write_experiment(report, c.output, csv_path.string());
  }
  if (!report.all_assertions_held) {
    for (const auto& f : report.failures) {
      std::cerr << "trial " << f.trial << ": " << f.reason << '\n';
    }
    return kExitAssertion;
  }
  return 0;
}

int cmd_render(const Common& c, const std::vector<std::string>& layer_names,
               std::optional<SiteId> region_of, std::optional<SiteId> source,
               const std::string& dest) {
  json j = read_json_file(c.input);
  SiteSet sites = sites_from_json(j);
  RenderLayers layers;
  layers.voronoi = layers.delaunay = false;
  if (j.contains("edges")) layers.graph = graph_from_json(j);
  for (const auto& name : layer_names) {
    if (name == "voronoi") {
      layers.voronoi = true;
    } else if (name == "delaunay") {
      layers.delaunay = true;
    } else if (name != "graph") {
      throw Error(ErrorCode::ConfigError, "unknown layer '" + name + "'");
    }
  }
  if (std::find(layer_names.begin(), layer_names.end(), "graph") == layer_names.end()) {
    layers.graph.reset();
  }
  layers.vertex_region = region_of;
  if (source) {
    if (dest.empty()) throw Error(ErrorCode::ConfigError, "--source needs --dest");
    GeometricGraph g = j.contains("edges") ? graph_from_json(j) : delaunay_graph(sites);
    sites.at(*source);
    layers.route = route(g, *source, parse_point(dest));
  }
  emit(c, render_svg(sites, layers));
  return 0;
}

int cmd_generate(const Common& c, GeneratorSpec spec, const std::string& kind) {
  spec.kind = parse_generator_kind(kind);
  spec.seed = c.seed;
  SiteSet sites = generate(spec);
  emit(c, sites_to_json(sites).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy routing support verifier"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", common.input, "Input file (JSON)");
    if (needs_input) in->required();
    sub->add_option("--output", common.output, "Output file (default: stdout)");
    sub->add_option("--format", common.format, "json | csv | svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { common.seed = s; common.seed_given = true; }, "Seed");
  };

  auto* tri = app.add_subcommand("triangulate", "Delaunay graph with edge classification");
  add_common(tri, true);

  auto* check = app.add_subcommand("check", "Decide greedy support of a graph (exit 1 if unsupported)");
  add_common(check, true);

  SiteId route_source = 0;
  std::string route_dest;
  auto* rt = app.add_subcommand("route", "Greedy route from a site to a destination point");
  add_common(rt, true);
  rt->add_option("--source", route_source, "Source site id")->required();
  rt->add_option("--dest", route_dest, "Destination 'x,y' (exact numbers)")->required();

  auto* exp = app.add_subcommand("experiment", "Run an experiment config");
  add_common(exp, true);

  std::vector<std::string> layers{"voronoi", "delaunay", "graph"};
  std::optional<SiteId> region_of, render_source;
  std::string render_dest;
  auto* render = app.add_subcommand("render", "Render an SVG figure");
  add_common(render, true);
  render->add_option("--layers", layers, "Any of voronoi, delaunay, graph")->delimiter(',');
  render->add_option("--vertex-region", region_of, "Draw this site's vertex region");
  render->add_option("--source", render_source, "Draw a route from this site");
  render->add_option("--dest", render_dest, "Route destination 'x,y'");

  GeneratorSpec gen;
  std::string gen_kind = "uniform";
  std::string gen_radius = "1";
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated point set");
  add_common(generate_cmd, false);
  generate_cmd->add_option("--kind", gen_kind, "uniform | cocircular | lattice | clustered");
  generate_cmd->add_option("--n", gen.n, "Number of sites")->required();
  generate_cmd->add_option("--bound", gen.bound, "Coordinate bound");
  generate_cmd->add_option("--radius", gen_radius, "Circle radius (cocircular)");
  generate_cmd->add_option("--clusters", gen.clusters, "Cluster count (clustered)");
  generate_cmd->add_option("--columns", gen.columns, "Points per row (lattice)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*tri) return cmd_triangulate(common);
    if (*check) return cmd_check(common);
    if (*rt) return cmd_route(common, route_source, route_dest);
    if (*exp) return cmd_experiment(common);
    if (*render) return cmd_render(common, layers, region_of, render_source, render_dest);
    if (*generate_cmd) {
      gen.radius = parse_scalar(gen_radius);
      return cmd_generate(common, gen, gen_kind);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
