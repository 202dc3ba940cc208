#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanvis/graph.hpp"
#include "fanvis/polygon.hpp"
#include "fanvis/projection.hpp"
#include "fanvis/terrain.hpp"

namespace fanvis {

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict v) noexcept;

struct SearchStats {
  std::size_t orders_tried = 0;
  std::size_t nodes = 0;
  std::size_t oracle_calls = 0;

  SearchStats& operator+=(const SearchStats& other) {
    orders_tried += other.orders_tried;
    nodes += other.nodes;
    oracle_calls += other.oracle_calls;
    return *this;
  }
};

// Answer of a terrain recognizer. Realizable answers carry a terrain and the
// realization order: order[t] is the query-graph vertex placed at terrain
// position t. Callers re-verify it; it is never trusted.
struct TerrainOracleResult {
  enum class Kind { Realizable, NotRealizable, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Terrain> terrain;
  std::vector<std::size_t> order;
  std::string reason;
  SearchStats stats;
};

class TerrainOracle {
 public:
  virtual ~TerrainOracle() = default;
  virtual TerrainOracleResult query(const OrderedGraph& g) = 0;
};

/// Necessary-condition filter. NotRealizable when no Hamiltonian path exists or
/// none of them is a persistent order; Unknown otherwise (never Realizable).
TerrainOracleResult persistence_filter_oracle(const OrderedGraph& g);

struct GridRealizerOptions {
  enum class Mode { UnitX, FullGrid };
  Mode mode = Mode::UnitX;
  long height_bound = 4;  // heights in [0, height_bound)
  long width = 0;         // FullGrid: x in [0, width); 0 means 2n
  std::size_t node_budget = 20'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
};

/// Exhaustive integer-grid terrain search over every persistent Hamiltonian
/// order. Exhausting the family is reported as Unknown, since the family is
/// not complete; exceeding the budget is Unknown too.
TerrainOracleResult grid_realizer_oracle(const OrderedGraph& g,
                                         const GridRealizerOptions& options);

class PersistenceFilterOracle final : public TerrainOracle {
 public:
  TerrainOracleResult query(const OrderedGraph& g) override {
    return persistence_filter_oracle(g);
  }
};

class GridRealizerOracle final : public TerrainOracle {
 public:
  explicit GridRealizerOracle(GridRealizerOptions options = {}) : options_(options) {}
  TerrainOracleResult query(const OrderedGraph& g) override {
    return grid_realizer_oracle(g, options_);
  }

 private:
  GridRealizerOptions options_;
};

// witness[i] is the input-graph vertex realized by certificate vertex i.
struct FanRecognition {
  Verdict verdict = Verdict::Unknown;
  std::optional<ConvexFan> fan;
  std::vector<std::size_t> witness;
  std::string reason;
  SearchStats stats;
};

struct TerrainRecognition {
  Verdict verdict = Verdict::Unknown;
  std::optional<Terrain> terrain;
  std::vector<std::size_t> witness;
  std::string reason;
  SearchStats stats;
};

/// No universal vertex means No without consulting the oracle. Otherwise each
/// universal vertex v is removed and G - v handed to the oracle; a realizable
/// answer is lifted to a fan and verified against G. Throws
/// OracleCertificateInvalid if an oracle certificate does not check out.
FanRecognition recognize_convex_fan(const OrderedGraph& g, TerrainOracle& oracle,
                                    const CentralProjection& cp = {});

// Same pipeline; the certificate fan is the product.
FanRecognition reconstruct_convex_fan(const OrderedGraph& g, TerrainOracle& oracle,
                                      const CentralProjection& cp = {});

using FanRecognizer = std::function<FanRecognition(const OrderedGraph&)>;

/// Adds a universal vertex, asks the fan recognizer, and projects a certificate
/// fan back to a terrain verified against G. Throws CertificateInvalid when the
/// recognizer's certificate fails verification.
TerrainRecognition recognize_terrain(const OrderedGraph& g, const FanRecognizer& recognizer,
                                     const CentralProjection& cp = {});

TerrainRecognition reconstruct_terrain(const OrderedGraph& g, const FanRecognizer& recognizer,
                                       const CentralProjection& cp = {});

}  // namespace fanvis
