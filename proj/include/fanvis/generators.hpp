#pragma once

#include <cstdint>
#include <random>

#include "fanvis/exact.hpp"
#include "fanvis/polygon.hpp"
#include "fanvis/terrain.hpp"

namespace fanvis {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 6;
  std::int64_t coordinate_bound = 100;
  std::size_t max_rejections = 10000;
};

// Portable random source: std::mt19937_64 (its output sequence is fixed by the
// C++ standard) plus bounded draws by rejection, so instances reproduce on
// every platform. std::uniform_int_distribution is not used because its
// algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // Uniform rational num/den with den in [1, max_den] and value in [lo, hi].
  Scalar rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

/// Kernel at the origin, remaining vertices at r * (d, 1) for distinct
/// rational slopes d and radii r in [1, coordinate_bound], listed by
/// decreasing slope (counterclockwise). Throws GenerationExhausted.
ConvexFan gen_convex_fan(const GenConfig& cfg);

/// x_i = i; integer heights in [0, coordinate_bound) in grid mode, rationals
/// with denominators up to 8 otherwise. Always in general position. Throws
/// GenerationExhausted.
Terrain gen_terrain(const GenConfig& cfg, bool grid);

}  // namespace fanvis
