#include "greedy/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "greedy/batch.hpp"
#include "greedy/delaunay.hpp"
#include "greedy/harness/io.hpp"
#include "greedy/harness/perturb.hpp"
#include "greedy/verifier.hpp"

namespace greedy::harness {

const char* to_string(SubstrateKind kind) {
  switch (kind) {
    case SubstrateKind::Delaunay: return "delaunay";
    case SubstrateKind::DelaunayMinusRandomEdge: return "delaunay-minus-random-edge";
    case SubstrateKind::DelaunayPlusRandomEdges: return "delaunay-plus-random-edges";
    case SubstrateKind::DelaunayRandomEdits: return "delaunay-random-edits";
    case SubstrateKind::Knn: return "knn";
    case SubstrateKind::UnitDisk: return "unit-disk";
    case SubstrateKind::Complete: return "complete";
  }
  return "?";
}

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    config_error(std::string("bad value for \"") + key + "\": " + j.at(key).dump());
  }
}

Scalar scalar_or(const json& j, const char* key, Scalar fallback) {
  if (!j.contains(key)) return fallback;
  try {
    const auto& v = j.at(key);
    return v.is_string() ? parse_scalar(v.get<std::string>()) : parse_scalar(v.dump());
  } catch (const Error&) {
    config_error(std::string("bad number for \"") + key + "\"");
  }
}

SubstrateKind parse_substrate_kind(const std::string& name) {
  for (auto k : {SubstrateKind::Delaunay, SubstrateKind::DelaunayMinusRandomEdge,
                 SubstrateKind::DelaunayPlusRandomEdges, SubstrateKind::DelaunayRandomEdits,
                 SubstrateKind::Knn, SubstrateKind::UnitDisk, SubstrateKind::Complete}) {
    if (name == to_string(k)) return k;
  }
  config_error("unknown substrate kind '" + name + "'");
}

GeometricGraph build_substrate(const SubstrateSpec& spec, const GeometricGraph& dg, Rng& rng) {
  const SiteSet& sites = dg.sites();
  const std::size_t n = sites.size();
  auto add_random = [&](std::vector<Edge>& edges, std::size_t count) {
    if (n < 2 || edges.size() >= n * (n - 1) / 2) return;
    for (std::size_t added = 0, tries = 0; added < count && tries < 100 * (count + 1); ++tries) {
      Edge e = make_edge(rng.below(n), rng.below(n));
      if (e.first == e.second || std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      edges.push_back(e);
      ++added;
    }
  };
  auto remove_random = [&](std::vector<Edge>& edges, std::size_t count) {
    for (std::size_t r = 0; r < count && !edges.empty(); ++r) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
    }
  };

  std::vector<Edge> edges = dg.edges();
  switch (spec.kind) {
    case SubstrateKind::Delaunay:
      return dg;
    case SubstrateKind::DelaunayMinusRandomEdge:
      remove_random(edges, 1);
      return GeometricGraph(sites, edges);
    case SubstrateKind::DelaunayPlusRandomEdges:
      add_random(edges, spec.add);
      return GeometricGraph(sites, edges);
    case SubstrateKind::DelaunayRandomEdits:
      remove_random(edges, spec.remove);
      add_random(edges, spec.add);
      return GeometricGraph(sites, edges);
    case SubstrateKind::Knn:
      return perturb(dg, KnnRewire{spec.k});
    case SubstrateKind::UnitDisk:
      return perturb(dg, UnitDisk{spec.radius});
    case SubstrateKind::Complete:
      return GeometricGraph::complete(sites);
  }
  return dg;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_experiment_config(const json& j) {
  if (!j.is_object()) config_error("config must be a JSON object");
  ExperimentConfig c;
  c.name = get_or<std::string>(j, "name", c.name);
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  c.trials = get_or<std::size_t>(j, "trials", c.trials);
  if (c.trials == 0) config_error("\"trials\" must be at least 1");
  c.destinations_per_site = get_or<std::size_t>(j, "destinations_per_site", c.destinations_per_site);
  c.cross_validate_trials = get_or<std::size_t>(j, "cross_validate_trials", c.cross_validate_trials);
  c.cross_validate_destinations_per_site = get_or<std::size_t>(
      j, "cross_validate_destinations_per_site", c.cross_validate_destinations_per_site);
  if (j.contains("expect_supports")) c.expect_supports = get_or<bool>(j, "expect_supports", false);
  c.record_wall_clock = get_or<bool>(j, "record_wall_clock", c.record_wall_clock);

  json gen = j.contains("generator") ? j["generator"] : json::object();
  if (!gen.is_object()) config_error("\"generator\" must be an object");
  try {
    c.generator.kind = parse_generator_kind(get_or<std::string>(gen, "kind", "uniform"));
  } catch (const Error& e) {
    config_error(e.what());
  }
  if (gen.contains("n")) {
    c.n_min = c.n_max = get_or<std::size_t>(gen, "n", 10);
  } else {
    c.n_min = get_or<std::size_t>(gen, "n_min", c.n_min);
    c.n_max = get_or<std::size_t>(gen, "n_max", c.n_max);
  }
  if (c.n_min == 0 || c.n_min > c.n_max) config_error("need 1 <= n_min <= n_max");
  c.generator.bound = get_or<std::int64_t>(gen, "bound", c.generator.bound);
  c.generator.radius = scalar_or(gen, "radius", c.generator.radius);
  if (gen.contains("center")) {
    try {
      c.generator.center = point_from_json(gen["center"]);
    } catch (const Error&) {
      config_error("bad \"center\"");
    }
  }
  c.generator.clusters = get_or<std::size_t>(gen, "clusters", c.generator.clusters);
  c.generator.spread = get_or<std::int64_t>(gen, "spread", c.generator.spread);
  c.generator.columns = get_or<std::size_t>(gen, "columns", c.generator.columns);

  json sub = j.contains("substrate") ? j["substrate"] : json::object();
  if (!sub.is_object()) config_error("\"substrate\" must be an object");
  c.substrate.kind = parse_substrate_kind(get_or<std::string>(sub, "kind", "delaunay"));
  c.substrate.k = get_or<std::size_t>(sub, "k", c.substrate.k);
  c.substrate.radius = scalar_or(sub, "radius", c.substrate.radius);
  c.substrate.add = get_or<std::size_t>(sub, "add", c.substrate.add);
  c.substrate.remove = get_or<std::size_t>(sub, "remove", c.substrate.remove);
  if (c.substrate.kind == SubstrateKind::Knn && c.substrate.k == 0) config_error("knn needs k >= 1");
  if (c.substrate.kind == SubstrateKind::UnitDisk && sign(c.substrate.radius) <= 0) {
    config_error("unit-disk needs a positive radius");
  }
  return c;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  ExperimentReport out;
  json trials = json::array();
  std::ostringstream csv;
  csv << "seed,n,substrate,supports,delivery_rate,max_hops\n";

  std::size_t supported = 0, agreed = 0, routes = 0, delivered = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const std::uint64_t trial_seed = mix_seed(config.seed, t);
    Rng rng(trial_seed);
    GeneratorSpec gen = config.generator;
    gen.n = config.n_min + rng.below(config.n_max - config.n_min + 1);
    gen.seed = rng.next();
    SiteSet sites = generate(gen);

    SupportChecker checker(sites);
    GeometricGraph g = build_substrate(config.substrate, checker.delaunay(), rng);
    SupportVerdict verdict = checker.check(g);
    auto battery = batch::destination_battery(sites, config.destinations_per_site, rng);
    auto stats = batch::route_battery(g, battery);

    std::vector<std::string> broken;
    if (!verdict.methods_agree()) broken.push_back("edge test and region test disagree");
    if (verdict.supports && stats.delivered != stats.routes) {
      broken.push_back("supported graph failed to deliver");
    }
    if (!verdict.supports) {
      const auto& ce = verdict.counterexample;
      if (!ce || ce->trace.delivered() || is_nearest(sites, ce->trace.terminal(), ce->destination)) {
        broken.push_back("unsupported graph lacks a stuck counterexample");
      }
    }
    if (config.expect_supports && *config.expect_supports != verdict.supports) {
      broken.push_back("support verdict differs from expect_supports");
    }
    json cv = nullptr;
    if (config.cross_validate_trials > 0) {
      auto report = cross_validate(sites, config.cross_validate_trials, rng.next(),
                                   config.cross_validate_destinations_per_site);
      cv = json{{"trials", report.trials.size()},
                {"agreements", report.agreements},
                {"all_ok", report.all_ok}};
      if (!report.all_ok) broken.push_back("cross-validation failed");
    }

    supported += verdict.supports ? 1 : 0;
    agreed += verdict.methods_agree() ? 1 : 0;
    routes += stats.routes;
    delivered += stats.delivered;

    json rec = verdict_to_json(verdict);
    rec["index"] = t;
    rec["seed"] = trial_seed;
    rec["n"] = sites.size();
    rec["generator"] = to_string(gen.kind);
    rec["generator_seed"] = gen.seed;
    rec["substrate"] = to_string(config.substrate.kind);
    rec["edges"] = g.edge_count();
    rec["methods_agree"] = verdict.methods_agree();
    rec["routes"] = stats.routes;
    rec["delivered"] = stats.delivered;
    rec["delivery_rate"] = stats.delivery_rate();
    rec["mean_hops"] = stats.mean_hops();
    rec["max_hops"] = stats.max_hops;
    rec["cross_validation"] = cv;
    rec["assertions_held"] = broken.empty();
    rec["violations"] = broken;
    trials.push_back(std::move(rec));

    csv << trial_seed << ',' << sites.size() << ',' << to_string(config.substrate.kind) << ','
        << (verdict.supports ? "true" : "false") << ',' << fixed6(stats.delivery_rate()) << ','
        << stats.max_hops << '\n';

    if (!broken.empty()) {
      out.all_assertions_held = false;
      out.failures.push_back({t, g, broken.front()});
    }
  }

  const double n_trials = double(config.trials);
  out.report = json{{"name", config.name},
                    {"seed", config.seed},
                    {"trials", trials},
                    {"summary",
                     {{"trials", config.trials},
                      {"support_rate", double(supported) / n_trials},
                      {"agreement_rate", double(agreed) / n_trials},
                      {"routes", routes},
                      {"delivery_rate", routes == 0 ? 1.0 : double(delivered) / double(routes)},
                      {"all_assertions_held", out.all_assertions_held}}}};
  if (config.record_wall_clock) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    out.report["wall_clock_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  out.csv = csv.str();
  return out;
}

void write_experiment(const ExperimentReport& report, const std::string& json_path,
                      const std::string& csv_path) {
  write_text_file(json_path, report.report.dump(2) + "\n");
  write_text_file(csv_path, report.csv);
  for (const auto& f : report.failures) {
    json j = graph_to_json(f.graph);
    j["reason"] = f.reason;
    write_text_file(json_path + ".failure-" + std::to_string(f.trial) + ".json", j.dump(2) + "\n");
  }
}

}  // namespace greedy::harness
