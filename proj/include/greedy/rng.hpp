#pragma once

#include <cstdint>
#include <random>

namespace greedy {

/// std::mt19937_64 with bounded draws done by rejection sampling, so a seed
/// yields the same stream on every platform and standard library
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer of base + index; derives independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace greedy
