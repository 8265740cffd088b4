#pragma once

#include <cstdint>
#include <random>

namespace gqaoa {

// Reproducible random stream.
//
// Algorithm: std::mt19937_64 (fully specified by the C++ standard) seeded with
// splitmix64(seed). Uniform doubles use the top 53 bits of each draw; normal
// deviates use the Box-Muller transform (cosine branch, one deviate per pair
// of uniforms). Nothing here depends on implementation-defined distributions,
// so streams match across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for a sub-task, derived from (seed, index).
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Normal(mean, stddev^2).
  double normal(double mean = 0.0, double stddev = 1.0);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace gqaoa
