#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "greedy/graph.hpp"
#include "greedy/harness/generate.hpp"

namespace greedy::harness {

enum class SubstrateKind {
  Delaunay,
  DelaunayMinusRandomEdge,
  DelaunayPlusRandomEdges,
  DelaunayRandomEdits,
  Knn,
  UnitDisk,
  Complete,
};

struct SubstrateSpec {
  SubstrateKind kind = SubstrateKind::Delaunay;
  std::size_t k = 3;         // knn
  Scalar radius = 1;         // unit-disk
  std::size_t add = 1;       // plus-random-edges / random-edits
  std::size_t remove = 1;    // random-edits
};

const char* to_string(SubstrateKind kind);

struct ExperimentConfig {
  std::string name = "experiment";
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  GeneratorSpec generator;  // generator.n is ignored; n is drawn from [n_min, n_max]
  std::size_t n_min = 10;
  std::size_t n_max = 10;
  SubstrateSpec substrate;
  std::size_t destinations_per_site = 10;
  std::size_t cross_validate_trials = 0;
  std::size_t cross_validate_destinations_per_site = 2;
  std::optional<bool> expect_supports;
  bool record_wall_clock = false;
};

/// Throws ConfigError with the offending key.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

struct FailedInstance {
  std::size_t trial;
  GeometricGraph graph;
  std::string reason;
};

struct ExperimentReport {
  nlohmann::json report;  // byte-stable unless record_wall_clock is set
  std::string csv;        // seed,n,substrate,supports,delivery_rate,max_hops
  bool all_assertions_held = true;
  std::vector<FailedInstance> failures;
};

/// Per trial: draw n and a generator seed from mix_seed(seed, trial), build
/// the substrate, decide support, route the destination battery from every
/// source, optionally cross-validate, and check the invariants.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Writes report JSON to json_path, CSV to csv_path and each failing instance
/// as a graph file next to the report. Throws IoError.
void write_experiment(const ExperimentReport& report, const std::string& json_path,
                      const std::string& csv_path);

}  // namespace greedy::harness
