#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greedy/sites.hpp"

namespace greedy::harness {

enum class GeneratorKind { UniformGrid, CocircularRational, Lattice, Clustered };

const char* to_string(GeneratorKind kind);
/// Accepts "uniform", "cocircular", "lattice", "clustered". Throws InvalidSpec.
GeneratorKind parse_generator_kind(const std::string& name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::UniformGrid;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  /// Coordinates lie in [0, bound]^2 (uniform, lattice, cluster centers).
  std::int64_t bound = 1000000;
  /// Cocircular: circle center and radius.
  Point center{Scalar(0), Scalar(0)};
  Scalar radius = 1;
  /// Clustered: number of centers and half-width of each cluster box (0 = bound / 20).
  std::size_t clusters = 4;
  std::int64_t spread = 0;
  /// Lattice: points per row (0 = ceil(sqrt(n))).
  std::size_t columns = 0;
};

/// Deterministic in the spec. Throws InvalidSpec.
SiteSet generate(const GeneratorSpec& spec);

/// Parameters 0, 1, -1, infinity, then +-p/q by increasing max(p, q). The
/// point for t is center + radius * ((1 - t^2) / (1 + t^2), 2t / (1 + t^2));
/// infinity maps to center + radius * (-1, 0).
std::vector<Point> rational_circle_points(std::size_t count, const Point& center, const Scalar& radius);

}  // namespace greedy::harness
