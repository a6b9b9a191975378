#include "greedy/harness/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "greedy/rng.hpp"

namespace greedy::harness {

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::UniformGrid: return "uniform";
    case GeneratorKind::CocircularRational: return "cocircular";
    case GeneratorKind::Lattice: return "lattice";
    case GeneratorKind::Clustered: return "clustered";
  }
  return "?";
}

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "uniform") return GeneratorKind::UniformGrid;
  if (name == "cocircular") return GeneratorKind::CocircularRational;
  if (name == "lattice") return GeneratorKind::Lattice;
  if (name == "clustered") return GeneratorKind::Clustered;
  throw Error(ErrorCode::InvalidSpec, "unknown generator kind '" + name + "'");
}

std::vector<Point> rational_circle_points(std::size_t count, const Point& center,
                                          const Scalar& radius) {
  std::vector<Point> out;
  auto emit = [&](const Scalar& t) {
    Scalar t2 = t * t;
    Scalar x = (1 - t2) / (1 + t2);
    Scalar y = 2 * t / (1 + t2);
    out.push_back({center.x + radius * x, center.y + radius * y});
  };
  if (count == 0) return out;
  emit(Scalar(0));
  if (out.size() < count) emit(Scalar(1));
  if (out.size() < count) emit(Scalar(-1));
  if (out.size() < count) out.push_back({center.x - radius, center.y});
  for (long h = 2; out.size() < count; ++h) {
    for (long q = 1; q <= h && out.size() < count; ++q) {
      for (long p = 1; p <= h && out.size() < count; ++p) {
        if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
        emit(Scalar(p, q));
        if (out.size() < count) emit(Scalar(-p, q));
      }
    }
  }
  return out;
}

namespace {

std::vector<Point> uniform_points(const GeneratorSpec& spec, Rng& rng) {
  const double capacity = std::pow(double(spec.bound) + 1.0, 2.0);
  if (double(spec.n) > capacity) {
    throw Error(ErrorCode::InvalidSpec, "more points requested than grid positions");
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point> out;
  while (out.size() < spec.n) {
    auto x = rng.uniform(0, spec.bound);
    auto y = rng.uniform(0, spec.bound);
    if (seen.emplace(x, y).second) out.push_back({Scalar(x), Scalar(y)});
  }
  return out;
}

std::vector<Point> lattice_points(const GeneratorSpec& spec) {
  std::size_t cols = spec.columns;
  if (cols == 0) cols = static_cast<std::size_t>(std::ceil(std::sqrt(double(spec.n))));
  std::size_t rows = (spec.n + cols - 1) / cols;
  auto coord = [&](std::size_t k, std::size_t count) {
    if (count <= 1) return Scalar(0);
    Scalar v(mpz_class(static_cast<long>(k)) * spec.bound, mpz_class(static_cast<long>(count - 1)));
    v.canonicalize();
    return v;
  };
  std::vector<Point> out;
  for (std::size_t r = 0; r < rows && out.size() < spec.n; ++r) {
    for (std::size_t c = 0; c < cols && out.size() < spec.n; ++c) {
      out.push_back({coord(c, cols), coord(r, rows)});
    }
  }
  return out;
}

std::vector<Point> clustered_points(const GeneratorSpec& spec, Rng& rng) {
  if (spec.clusters == 0) throw Error(ErrorCode::InvalidSpec, "clustered generator needs clusters >= 1");
  std::int64_t spread = spec.spread > 0 ? spec.spread : std::max<std::int64_t>(1, spec.bound / 20);
  std::vector<std::pair<std::int64_t, std::int64_t>> centers;
  for (std::size_t c = 0; c < spec.clusters; ++c) {
    centers.emplace_back(rng.uniform(0, spec.bound), rng.uniform(0, spec.bound));
  }
  const double capacity = double(spec.clusters) * std::pow(2.0 * double(spread) + 1.0, 2.0);
  if (double(spec.n) > capacity) throw Error(ErrorCode::InvalidSpec, "clusters too small for n");
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point> out;
  while (out.size() < spec.n) {
    auto [cx, cy] = centers[rng.below(centers.size())];
    auto x = cx + rng.uniform(-spread, spread);
    auto y = cy + rng.uniform(-spread, spread);
    if (seen.emplace(x, y).second) out.push_back({Scalar(x), Scalar(y)});
  }
  return out;
}

std::vector<Point> cocircular_points(const GeneratorSpec& spec) {
  if (sign(spec.radius) <= 0) throw Error(ErrorCode::InvalidSpec, "radius must be positive");
  if (spec.seed == 0) return rational_circle_points(spec.n, spec.center, spec.radius);
  // Seeded: a sample of n parameters from the first 2n + 4, kept in enumeration order.
  auto pool = rational_circle_points(2 * spec.n + 4, spec.center, spec.radius);
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(spec.seed);
  for (std::size_t k = 0; k < spec.n; ++k) {
    std::swap(idx[k], idx[k + rng.below(idx.size() - k)]);
  }
  idx.resize(spec.n);
  std::sort(idx.begin(), idx.end());
  std::vector<Point> out;
  for (auto k : idx) out.push_back(pool[k]);
  return out;
}

}  // namespace

SiteSet generate(const GeneratorSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::InvalidSpec, "n must be at least 1");
  if (spec.bound < 0) throw Error(ErrorCode::InvalidSpec, "bound must be nonnegative");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::UniformGrid: return SiteSet(uniform_points(spec, rng));
    case GeneratorKind::CocircularRational: return SiteSet(cocircular_points(spec));
    case GeneratorKind::Lattice: return SiteSet(lattice_points(spec));
    case GeneratorKind::Clustered: return SiteSet(clustered_points(spec, rng));
  }
  throw Error(ErrorCode::InvalidSpec, "unknown generator");
}

}  // namespace greedy::harness
