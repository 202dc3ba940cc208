#include "fanvis/verify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "fanvis/error.hpp"
#include "fanvis/generators.hpp"

namespace fanvis {
namespace {

using io::json;

constexpr std::uint64_t kFanStream = 1;
constexpr std::uint64_t kTerrainStream = 2;
constexpr std::uint64_t kCenterStream = 3;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Failure {
  std::size_t index;
  json detail;
};

struct InstanceOutcome {
  std::size_t checks = 0;
  std::optional<json> failure;
};

GenConfig instance_config(const VerifyConfig& cfg, std::uint64_t stream, std::size_t index,
                          std::size_t min_n) {
  GenConfig g;
  g.seed = instance_seed(cfg.seed, stream, index);
  Rng rng(g.seed ^ 0x5eedULL);
  const std::size_t hi = std::max(cfg.max_n, min_n);
  g.n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(min_n),
                                             static_cast<std::int64_t>(hi)));
  g.coordinate_bound = cfg.coordinate_bound;
  return g;
}

Terrain flipped(const Terrain& t) {
  std::vector<Point2> pts;
  for (const Point2& v : t.vertices()) pts.emplace_back(v.x, -v.y);
  return validate_terrain(std::move(pts));
}

json counterexample(const char* kind, const char* check, std::size_t index, const GenConfig& g,
                    const json& instance, const CentralProjection& cp, const std::string& detail) {
  return json{{"kind", kind},
              {"check", check},
              {"index", index},
              {"config", io::gen_config_to_json(g)},
              {"instance", instance},
              {"projection", io::projection_to_json(cp)},
              {"detail", detail}};
}

InstanceOutcome check_fan(const VerifyConfig& cfg, const std::vector<CentralProjection>& centers,
                          std::size_t index) {
  InstanceOutcome out;
  const GenConfig g = instance_config(cfg, kFanStream, index, 3);
  ConvexFan fan = gen_convex_fan(g);
  for (const CentralProjection& cp : centers) {
    ++out.checks;
    try {
      FanToTerrain ft = fan_to_terrain(cp, fan);
      Terrain terrain = cfg.sabotage ? flipped(ft.terrain) : std::move(ft.terrain);
      if (!correspondence_holds(fan, terrain, ft.map)) {
        out.failure = counterexample("fan", "forward", index, g, io::fan_to_json(fan), cp,
                                     "visibility graphs differ; terrain " +
                                         io::terrain_to_json(terrain).dump());
        return out;
      }
    } catch (const Error& e) {
      out.failure = counterexample("fan", "forward", index, g, io::fan_to_json(fan), cp,
                                   std::string(to_string(e.code())) + ": " + e.what());
      return out;
    }
  }
  return out;
}

InstanceOutcome check_terrain(const VerifyConfig& cfg,
                              const std::vector<CentralProjection>& centers, std::size_t index) {
  InstanceOutcome out;
  const GenConfig g = instance_config(cfg, kTerrainStream, index, 2);
  Terrain terrain = gen_terrain(g, false);
  const VisibilityGraph original = visibility_graph_of_terrain(terrain);
  for (const CentralProjection& cp : centers) {
    const char* check = "backward";
    try {
      ++out.checks;
      TerrainToFan tf = terrain_to_fan(cp, terrain);
      if (!correspondence_holds(tf.fan, terrain, tf.map)) {
        out.failure = counterexample("terrain", check, index, g, io::terrain_to_json(terrain),
                                     cp, "visibility graphs differ; fan " +
                                             io::fan_to_json(tf.fan).dump());
        return out;
      }

      check = "round_trip";
      ++out.checks;
      FanToTerrain back = fan_to_terrain(cp, tf.fan);
      std::vector<std::size_t> fan_to_original(tf.fan.size());
      for (std::size_t t = 0; t < terrain.size(); ++t) fan_to_original[tf.map.terrain_to_fan[t]] = t;
      std::vector<std::size_t> map;
      for (std::size_t f : back.map.terrain_to_fan) map.push_back(fan_to_original[f]);
      if (!graphs_equal_under_map(visibility_graph_of_terrain(back.terrain), original, map)) {
        out.failure = counterexample("terrain", check, index, g, io::terrain_to_json(terrain),
                                     cp, "round-trip terrain " +
                                             io::terrain_to_json(back.terrain).dump() +
                                             " has a different visibility graph");
        return out;
      }
    } catch (const Error& e) {
      out.failure = counterexample("terrain", check, index, g, io::terrain_to_json(terrain), cp,
                                   std::string(to_string(e.code())) + ": " + e.what());
      return out;
    }
  }
  return out;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ (stream << 56)) + index);
}

std::vector<CentralProjection> verification_centers(const VerifyConfig& cfg) {
  std::vector<CentralProjection> centers{cfg.projection};
  Rng rng(instance_seed(cfg.seed, kCenterStream, 0));
  while (centers.size() < cfg.centers) {
    Scalar px = rng.rational(0, 10, 8);
    Scalar pz = rng.rational(0, 10, 8);
    Scalar py = rng.rational(-10, 10, 8);
    if (sign(px) <= 0 || sign(pz) <= 0) continue;
    centers.emplace_back(std::move(px), std::move(py), std::move(pz));
  }
  return centers;
}

json RunReport::to_json() const {
  json out{{"command", command}, {"inputs", inputs}, {"outcome", outcome},
           {"counterexamples", counterexamples}, {"stats", stats}};
  out["counterexample"] = counterexample ? *counterexample : json(nullptr);
  return out;
}

RunReport verify_theorem1(const VerifyConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<CentralProjection> centers = verification_centers(cfg);

  // Slots 0..count-1 are fans, count..2count-1 terrains.
  const std::size_t total = 2 * cfg.count;
  std::vector<InstanceOutcome> outcomes(total);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t slot = first; slot < total; slot += stride) {
      outcomes[slot] = slot < cfg.count ? check_fan(cfg, centers, slot)
                                        : check_terrain(cfg, centers, slot - cfg.count);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, std::max<std::size_t>(total, 1)));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) workers.emplace_back(work, w, jobs);
  }

  RunReport report;
  report.command = "verify-theorem1";
  json center_list = json::array();
  for (const auto& cp : centers) center_list.push_back(io::projection_to_json(cp));
  report.inputs = json{{"count", cfg.count},
                       {"max_n", cfg.max_n},
                       {"seed", cfg.seed},
                       {"coordinate_bound", cfg.coordinate_bound},
                       {"projections", center_list},
                       {"sabotage", cfg.sabotage}};
  std::size_t checks = 0;
  for (const InstanceOutcome& o : outcomes) {
    checks += o.checks;
    if (o.failure) {
      if (!report.counterexample) report.counterexample = o.failure;
      ++report.counterexamples;
    }
  }
  report.outcome = report.counterexamples == 0 ? "pass" : "fail";
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report.stats = json{{"fans", cfg.count},
                      {"terrains", cfg.count},
                      {"checks", checks},
                      {"elapsed_ms", elapsed.count()}};
  return report;
}

}  // namespace fanvis
