#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanvis/json_io.hpp"
#include "fanvis/projection.hpp"

namespace fanvis {

struct VerifyConfig {
  std::size_t count = 1000;
  std::size_t max_n = 12;
  std::uint64_t seed = 1;
  CentralProjection projection{};
  // Projection centers per instance: `projection` plus centers - 1 seeded ones.
  std::size_t centers = 5;
  std::int64_t coordinate_bound = 100;
  std::size_t jobs = 1;
  // Self-test hook: turns every forward terrain upside down before checking.
  bool sabotage = false;
};

struct RunReport {
  std::string command;
  io::json inputs;
  std::string outcome;  // "pass" | "fail" | "unknown"
  std::optional<io::json> counterexample;
  std::size_t counterexamples = 0;
  io::json stats;

  io::json to_json() const;
};

// Seed for instance `index` of stream `stream`; independent of job count.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

std::vector<CentralProjection> verification_centers(const VerifyConfig& cfg);

/// Generates cfg.count fans and cfg.count terrains and checks, under every
/// center, that fan -> terrain and terrain -> fan preserve visibility graphs
/// (kernel universal) and that terrain -> fan -> terrain keeps the graph.
RunReport verify_theorem1(const VerifyConfig& cfg);

}  // namespace fanvis
