#include "fanvis/generators.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fanvis/error.hpp"

namespace fanvis {
namespace {

[[noreturn]] void exhausted(const GenConfig& cfg, const char* what) {
  throw Error(ErrorCode::GenerationExhausted,
              std::string(what) + " generation exceeded " + std::to_string(cfg.max_rejections) +
                  " rejections (seed " + std::to_string(cfg.seed) + ", n " +
                  std::to_string(cfg.n) + ", bound " + std::to_string(cfg.coordinate_bound) + ")");
}

bool collinear_with_prefix(std::span<const Point2> placed, const Point2& p) {
  for (std::size_t a = 0; a < placed.size(); ++a) {
    for (std::size_t b = a + 1; b < placed.size(); ++b) {
      if (orient2d(placed[a], placed[b], p) == 0) return true;
    }
  }
  return false;
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

Scalar Rng::rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = uniform(1, max_den);
  const std::int64_t num = uniform(lo * den, hi * den);
  Scalar value{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  value.canonicalize();
  return value;
}

ConvexFan gen_convex_fan(const GenConfig& cfg) {
  if (cfg.n < 3) throw Error(ErrorCode::InvalidArgument, "a convex fan needs n >= 3");
  if (cfg.coordinate_bound < 1) {
    throw Error(ErrorCode::InvalidArgument, "coordinate_bound must be positive");
  }
  Rng rng(cfg.seed);
  const std::int64_t slope_range = 2 * cfg.coordinate_bound;
  std::size_t rejections = 0;

  for (;;) {
    std::vector<Scalar> slopes;
    while (slopes.size() + 1 < cfg.n) {
      Scalar d = rng.rational(-slope_range, slope_range, 4);
      if (std::find(slopes.begin(), slopes.end(), d) != slopes.end()) {
        if (++rejections > cfg.max_rejections) exhausted(cfg, "convex fan");
        continue;
      }
      slopes.push_back(std::move(d));
    }
    std::sort(slopes.begin(), slopes.end(), std::greater<>());

    std::vector<Point2> vertices;
    vertices.emplace_back(0, 0);
    bool ok = true;
    for (const Scalar& d : slopes) {
      const Scalar r = rng.rational(1, cfg.coordinate_bound, 4);
      Point2 v(r * d, r);
      if (collinear_with_prefix(vertices, v)) {
        ok = false;
        break;
      }
      vertices.push_back(std::move(v));
    }
    if (!ok) {
      if (++rejections > cfg.max_rejections) exhausted(cfg, "convex fan");
      continue;
    }
    return validate_convex_fan(validate_polygon(std::move(vertices)), 0);
  }
}

Terrain gen_terrain(const GenConfig& cfg, bool grid) {
  if (cfg.n < 2) throw Error(ErrorCode::InvalidArgument, "a terrain needs n >= 2");
  if (cfg.coordinate_bound < 1) {
    throw Error(ErrorCode::InvalidArgument, "coordinate_bound must be positive");
  }
  Rng rng(cfg.seed);
  constexpr std::size_t kAttemptsPerVertex = 64;
  std::size_t rejections = 0;

  for (;;) {
    std::vector<Point2> vertices;
    std::size_t attempts = 0;
    while (vertices.size() < cfg.n && attempts < kAttemptsPerVertex) {
      Scalar height = grid ? Scalar(static_cast<long>(rng.uniform(0, cfg.coordinate_bound - 1)))
                           : rng.rational(0, cfg.coordinate_bound, 8);
      if (!grid && height == cfg.coordinate_bound) height = 0;
      Point2 v(static_cast<long>(vertices.size()), std::move(height));
      if (collinear_with_prefix(vertices, v)) {
        ++attempts;
        if (++rejections > cfg.max_rejections) exhausted(cfg, "terrain");
        continue;
      }
      vertices.push_back(std::move(v));
      attempts = 0;
    }
    if (vertices.size() == cfg.n) return validate_terrain(std::move(vertices));
  }
}

}  // namespace fanvis
