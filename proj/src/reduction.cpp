#include "fanvis/reduction.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "fanvis/error.hpp"

namespace fanvis {
namespace {

using Kind = TerrainOracleResult::Kind;

constexpr const char* kTooSmall = "a terrain has at least 2 vertices";

struct IntPoint {
  long long x, y;
};

int orient(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
  const long long v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

// Graph g read in the given vertex order: vertex t of the result is order[t].
OrderedGraph in_order(const OrderedGraph& g, std::span<const std::size_t> order) {
  std::vector<std::size_t> position(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) position[order[t]] = t;
  return relabel(g, position);
}

// Depth-first placement of terrain vertices, checking every visibility pair as
// soon as both endpoints and everything between them are placed.
class GridSearch {
 public:
  GridSearch(const OrderedGraph& target, const GridRealizerOptions& options,
             std::size_t& nodes, std::chrono::steady_clock::time_point start)
      : target_(target), options_(options), nodes_(nodes), start_(start) {
    const long n = static_cast<long>(target.size());
    width_ = options.mode == GridRealizerOptions::Mode::UnitX
                 ? n
                 : (options.width > 0 ? options.width : 2 * n);
  }

  // Returns true once a realization is found; placed() then holds it.
  bool run() { return place(0); }
  bool budget_exceeded() const { return over_budget_; }
  const std::vector<IntPoint>& placed() const { return placed_; }

 private:
  bool place(std::size_t t) {
    if (t == target_.size()) return true;
    const long n = static_cast<long>(target_.size());
    long x_lo = static_cast<long>(t);
    long x_hi = static_cast<long>(t);
    if (options_.mode == GridRealizerOptions::Mode::FullGrid) {
      x_lo = placed_.empty() ? 0 : placed_.back().x + 1;
      // Leave room for the vertices still to come.
      x_hi = width_ - (n - static_cast<long>(t));
    }
    for (long x = x_lo; x <= x_hi; ++x) {
      for (long y = 0; y < options_.height_bound; ++y) {
        if (!charge()) return false;
        const IntPoint p{x, y};
        if (!consistent(p)) continue;
        placed_.push_back(p);
        if (place(t + 1)) return true;
        placed_.pop_back();
        if (over_budget_) return false;
      }
    }
    return false;
  }

  bool charge() {
    ++nodes_;
    if (nodes_ > options_.node_budget) over_budget_ = true;
    if (options_.time_budget && (nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *options_.time_budget) {
      over_budget_ = true;
    }
    return !over_budget_;
  }

  bool consistent(const IntPoint& p) const {
    const std::size_t t = placed_.size();
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) {
        if (orient(placed_[a], placed_[b], p) == 0) return false;
      }
    }
    for (std::size_t s = 0; s + 1 < t; ++s) {
      bool sees = true;
      for (std::size_t k = s + 1; k < t && sees; ++k) {
        sees = orient(placed_[s], p, placed_[k]) < 0;
      }
      if (sees != target_.has_edge(s, t)) return false;
    }
    return true;
  }

  const OrderedGraph& target_;
  const GridRealizerOptions& options_;
  std::size_t& nodes_;
  std::chrono::steady_clock::time_point start_;
  long width_ = 0;
  bool over_budget_ = false;
  std::vector<IntPoint> placed_;
};

// One reason per removed universal vertex; identical reasons collapse to one.
std::string join(const std::vector<std::pair<std::size_t, std::string>>& parts) {
  const bool same = std::all_of(parts.begin(), parts.end(),
                                [&](const auto& p) { return p.second == parts.front().second; });
  if (same && !parts.empty()) return parts.front().second;
  std::string out;
  for (const auto& [v, why] : parts) {
    if (!out.empty()) out += "; ";
    out += "G - " + std::to_string(v) + ": " + why;
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

TerrainOracleResult persistence_filter_oracle(const OrderedGraph& g) {
  TerrainOracleResult result;
  if (g.size() < 2) {
    result.kind = Kind::NotRealizable;
    result.reason = kTooSmall;
    return result;
  }
  bool any_path = false;
  bool any_persistent = false;
  result.stats.nodes = for_each_hamiltonian_path(g, [&](std::span<const std::size_t> path) {
    any_path = true;
    ++result.stats.orders_tried;
    any_persistent = is_persistent(in_order(g, path));
    return !any_persistent;
  });
  if (!any_path) {
    result.kind = Kind::NotRealizable;
    result.reason = "no Hamiltonian path";
  } else if (!any_persistent) {
    result.kind = Kind::NotRealizable;
    result.reason = "no persistent Hamiltonian order";
  } else {
    result.kind = Kind::Unknown;
    result.reason = "a persistent order exists; persistence alone does not prove realizability";
  }
  return result;
}

TerrainOracleResult grid_realizer_oracle(const OrderedGraph& g,
                                         const GridRealizerOptions& options) {
  TerrainOracleResult filter = persistence_filter_oracle(g);
  if (filter.kind == Kind::NotRealizable) return filter;

  TerrainOracleResult result;
  result.stats = filter.stats;
  const auto start = std::chrono::steady_clock::now();
  bool over_budget = false;
  std::size_t search_nodes = 0;

  for_each_hamiltonian_path(g, [&](std::span<const std::size_t> path) {
    const OrderedGraph target = in_order(g, path);
    if (!is_persistent(target)) return true;
    ++result.stats.orders_tried;
    GridSearch search(target, options, search_nodes, start);
    if (search.run()) {
      std::vector<Point2> vertices;
      for (const IntPoint& p : search.placed()) {
        vertices.emplace_back(static_cast<long>(p.x), static_cast<long>(p.y));
      }
      result.kind = Kind::Realizable;
      result.terrain = validate_terrain(std::move(vertices));
      result.order.assign(path.begin(), path.end());
      result.reason = "realized on the integer grid";
      return false;
    }
    over_budget = search.budget_exceeded();
    return !over_budget;
  });
  result.stats.nodes += search_nodes;

  if (result.kind != Kind::Realizable) {
    result.kind = Kind::Unknown;
    result.reason = over_budget ? "search budget exceeded"
                                : "no realization in the searched grid family";
  }
  return result;
}

FanRecognition recognize_convex_fan(const OrderedGraph& g, TerrainOracle& oracle,
                                    const CentralProjection& cp) {
  FanRecognition result;
  const std::vector<std::size_t> universal = universal_vertices(g);
  if (universal.empty()) {
    result.verdict = Verdict::No;
    result.reason = "no universal vertex";
    return result;
  }

  bool unknown = false;
  std::vector<std::pair<std::size_t, std::string>> reasons;
  for (std::size_t v : universal) {
    const VertexRemoval rest = remove_vertex(g, v);
    TerrainOracleResult answer = oracle.query(rest.graph);
    result.stats += answer.stats;
    ++result.stats.oracle_calls;

    if (answer.kind == Kind::NotRealizable) {
      reasons.emplace_back(v, answer.reason);
      continue;
    }
    if (answer.kind == Kind::Unknown) {
      unknown = true;
      reasons.emplace_back(v, answer.reason);
      continue;
    }

    auto invalid = [&](const std::string& why) {
      return Error(ErrorCode::OracleCertificateInvalid,
                   "oracle certificate for G - " + std::to_string(v) + " rejected: " + why);
    };
    if (!answer.terrain || answer.terrain->size() != rest.graph.size() ||
        answer.order.size() != rest.graph.size()) {
      throw invalid("missing terrain or wrong size");
    }
    const Terrain& terrain = *answer.terrain;
    try {
      if (!graphs_equal_under_map(visibility_graph_of_terrain(terrain), rest.graph,
                                  answer.order)) {
        throw invalid("terrain visibility graph differs from the query");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OracleCertificateInvalid) throw;
      throw invalid(e.what());
    }
    if (!terrain.general_position()) throw invalid("terrain is not in general position");

    TerrainToFan lifted = terrain_to_fan(cp, terrain);
    std::vector<std::size_t> witness(g.size());
    witness[lifted.map.kernel] = v;
    for (std::size_t t = 0; t < terrain.size(); ++t) {
      witness[lifted.map.terrain_to_fan[t]] = rest.original[answer.order[t]];
    }
    if (!graphs_equal_under_map(visibility_graph_of_polygon(lifted.fan.polygon()), g,
                                witness)) {
      throw Error(ErrorCode::CertificateInvalid,
                  "lifted fan's visibility graph does not match the input");
    }
    result.verdict = Verdict::Yes;
    result.fan = std::move(lifted.fan);
    result.witness = std::move(witness);
    result.reason = "G - " + std::to_string(v) + " is a terrain visibility graph";
    return result;
  }

  result.verdict = unknown ? Verdict::Unknown : Verdict::No;
  result.reason = join(reasons);
  return result;
}

FanRecognition reconstruct_convex_fan(const OrderedGraph& g, TerrainOracle& oracle,
                                      const CentralProjection& cp) {
  return recognize_convex_fan(g, oracle, cp);
}

TerrainRecognition recognize_terrain(const OrderedGraph& g, const FanRecognizer& recognizer,
                                     const CentralProjection& cp) {
  TerrainRecognition result;
  const OrderedGraph lifted = add_universal_vertex(g);
  const std::size_t added = g.size();

  FanRecognition answer = recognizer(lifted);
  result.stats = answer.stats;
  result.reason = answer.reason;
  if (answer.verdict != Verdict::Yes) {
    result.verdict = answer.verdict;
    return result;
  }

  auto invalid = [](const std::string& why) {
    return Error(ErrorCode::CertificateInvalid, "fan certificate rejected: " + why);
  };
  if (!answer.fan || answer.witness.size() != lifted.size() ||
      answer.fan->size() != lifted.size()) {
    throw invalid("missing fan or wrong size");
  }
  const ConvexFan& fan = *answer.fan;
  std::vector<std::size_t> witness = answer.witness;
  try {
    if (!graphs_equal_under_map(visibility_graph_of_polygon(fan.polygon()), lifted, witness)) {
      throw invalid("fan visibility graph differs from G plus a universal vertex");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CertificateInvalid) throw;
    throw invalid(e.what());
  }

  // The kernel realizes some universal vertex of G'. If it is an original
  // vertex u, then u and the added vertex are twins, so swapping them keeps
  // the witness an isomorphism.
  const std::size_t kernel = fan.kernel_index();
  if (witness[kernel] != added) {
    for (std::size_t& w : witness) {
      if (w == added) w = witness[kernel];
    }
    witness[kernel] = added;
  }

  FanToTerrain projected = fan_to_terrain(cp, fan);
  std::vector<std::size_t> terrain_witness;
  terrain_witness.reserve(projected.terrain.size());
  for (std::size_t f : projected.map.terrain_to_fan) terrain_witness.push_back(witness[f]);
  if (!graphs_equal_under_map(visibility_graph_of_terrain(projected.terrain), g,
                              terrain_witness)) {
    throw invalid("projected terrain's visibility graph does not match the input");
  }
  result.verdict = Verdict::Yes;
  result.terrain = std::move(projected.terrain);
  result.witness = std::move(terrain_witness);
  return result;
}

TerrainRecognition reconstruct_terrain(const OrderedGraph& g, const FanRecognizer& recognizer,
                                       const CentralProjection& cp) {
  return recognize_terrain(g, recognizer, cp);
}

}  // namespace fanvis
