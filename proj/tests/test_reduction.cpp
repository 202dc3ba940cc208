#include <gtest/gtest.h>

#include <chrono>

#include "fanvis/error.hpp"
#include "fanvis/generators.hpp"
#include "fanvis/reduction.hpp"
#include "oracles.hpp"

namespace fanvis {
namespace {

OrderedGraph make(std::size_t n, std::vector<Edge> edges) { return OrderedGraph(n, edges); }

OrderedGraph cycle(std::size_t n) {
  OrderedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

OrderedGraph path(std::size_t n) {
  OrderedGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

const OrderedGraph kStar = make(4, {{0, 1}, {0, 2}, {0, 3}});

std::vector<Point2> vertices_of(const Polygon& p) { return {p.vertices().begin(), p.vertices().end()}; }
std::vector<Point2> vertices_of(const Terrain& t) { return {t.vertices().begin(), t.vertices().end()}; }

// Independent certificate check: oracle VG of the certificate maps onto g.
void expect_fan_certificate(const OrderedGraph& g, const FanRecognition& r) {
  ASSERT_EQ(r.verdict, Verdict::Yes);
  ASSERT_TRUE(r.fan.has_value());
  EXPECT_TRUE(graphs_equal_under_map(oracle::polygon_graph(vertices_of(r.fan->polygon())), g, r.witness));
}

void expect_terrain_certificate(const OrderedGraph& g, const TerrainRecognition& r) {
  ASSERT_EQ(r.verdict, Verdict::Yes);
  ASSERT_TRUE(r.terrain.has_value());
  EXPECT_TRUE(graphs_equal_under_map(oracle::terrain_graph(vertices_of(*r.terrain)), g, r.witness));
}

FanRecognizer grid_recognizer() {
  return [](const OrderedGraph& g) {
    GridRealizerOracle oracle;
    return recognize_convex_fan(g, oracle);
  };
}

TEST(PersistenceFilterTest, WorkedExamples) {
  auto star = persistence_filter_oracle(kStar);
  EXPECT_EQ(star.kind, TerrainOracleResult::Kind::NotRealizable);
  EXPECT_EQ(star.reason, "no Hamiltonian path");
  EXPECT_EQ(persistence_filter_oracle(complete_graph(4)).kind, TerrainOracleResult::Kind::Unknown);
  // The X-violating order 0,1,2,3 is not the only Hamiltonian path here; the
  // path 1,0,2,3... is checked by enumeration instead of being assumed.
  const OrderedGraph xg = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
  bool any_persistent = false;
  for_each_hamiltonian_path(xg, [&](std::span<const std::size_t> order) {
    std::vector<std::size_t> perm(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) perm[order[t]] = t;
    if (is_persistent(relabel(xg, perm))) any_persistent = true;
    return true;
  });
  EXPECT_EQ(persistence_filter_oracle(xg).kind,
            any_persistent ? TerrainOracleResult::Kind::Unknown : TerrainOracleResult::Kind::NotRealizable);
}

TEST(GridRealizerTest, WorkedExamples) {
  GridRealizerOptions opt;
  opt.height_bound = 3;
  const auto p3 = grid_realizer_oracle(path(3), opt);
  ASSERT_EQ(p3.kind, TerrainOracleResult::Kind::Realizable);
  ASSERT_TRUE(p3.terrain.has_value());
  EXPECT_TRUE(graphs_equal_under_map(oracle::terrain_graph(vertices_of(*p3.terrain)), path(3), p3.order));

  opt.height_bound = 2;
  const auto k3 = grid_realizer_oracle(complete_graph(3), opt);
  ASSERT_EQ(k3.kind, TerrainOracleResult::Kind::Realizable);
  EXPECT_EQ(oracle::terrain_graph(vertices_of(*k3.terrain)), complete_graph(3));

  EXPECT_EQ(grid_realizer_oracle(kStar, {}).kind, TerrainOracleResult::Kind::NotRealizable);
}

TEST(GridRealizerTest, ExhaustedFamilyIsUnknown) {
  GridRealizerOptions opt;
  opt.height_bound = 1;  // only flat terrains, which are never in general position
  const auto r = grid_realizer_oracle(complete_graph(3), opt);
  EXPECT_EQ(r.kind, TerrainOracleResult::Kind::Unknown);
  EXPECT_FALSE(r.terrain.has_value());
}

TEST(GridRealizerTest, BudgetExceededIsUnknown) {
  GridRealizerOptions opt;
  opt.height_bound = 50;
  opt.node_budget = 10;
  const auto r = grid_realizer_oracle(path(6), opt);
  EXPECT_EQ(r.kind, TerrainOracleResult::Kind::Unknown);
  EXPECT_EQ(r.reason, "search budget exceeded");
}

TEST(GridRealizerTest, FullGridMode) {
  GridRealizerOptions opt;
  opt.mode = GridRealizerOptions::Mode::FullGrid;
  opt.height_bound = 3;
  const auto r = grid_realizer_oracle(path(4), opt);
  ASSERT_EQ(r.kind, TerrainOracleResult::Kind::Realizable);
  EXPECT_TRUE(graphs_equal_under_map(oracle::terrain_graph(vertices_of(*r.terrain)), path(4), r.order));
}

TEST(RecognizeConvexFanTest, CompleteGraphIsYes) {
  GridRealizerOracle oracle;
  expect_fan_certificate(complete_graph(4), recognize_convex_fan(complete_graph(4), oracle));
}

TEST(RecognizeConvexFanTest, CycleHasNoUniversalVertex) {
  PersistenceFilterOracle oracle;
  const auto start = std::chrono::steady_clock::now();
  const FanRecognition r = recognize_convex_fan(cycle(5), oracle);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(1));
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_EQ(r.reason, "no universal vertex");
  EXPECT_FALSE(r.fan.has_value());
  EXPECT_EQ(r.stats.oracle_calls, 0u);
}

TEST(RecognizeConvexFanTest, StarPlusUniversalIsNo) {
  GridRealizerOracle oracle;
  const FanRecognition r = recognize_convex_fan(add_universal_vertex(kStar), oracle);
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_FALSE(r.fan.has_value());
  EXPECT_TRUE(r.witness.empty());
}

TEST(ReconstructConvexFanTest, WorkedFanGraph) {
  const OrderedGraph g = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  GridRealizerOracle oracle;
  expect_fan_certificate(g, reconstruct_convex_fan(g, oracle));
}

TEST(ReconstructConvexFanTest, PathPlusUniversal) {
  // (0,0),(1,2),(2,0),(3,2) also has the chord {1,3}; (0,0),(1,2),(2,3),(3,0)
  // is a genuine P4 terrain.
  EXPECT_NE(oracle::terrain_graph(oracle::pts({{0, 0}, {1, 2}, {2, 0}, {3, 2}})), path(4));
  EXPECT_EQ(oracle::terrain_graph(oracle::pts({{0, 0}, {1, 2}, {2, 3}, {3, 0}})), path(4));
  const OrderedGraph g = add_universal_vertex(path(4));
  GridRealizerOracle oracle;
  const FanRecognition r = reconstruct_convex_fan(g, oracle);
  expect_fan_certificate(g, r);
  EXPECT_EQ(r.fan->size(), 5u);
}

TEST(ReconstructConvexFanTest, PersistenceOracleNeverAffirms) {
  PersistenceFilterOracle oracle;
  const FanRecognition r = reconstruct_convex_fan(complete_graph(4), oracle);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_FALSE(r.fan.has_value());
}

TEST(RecognizeTerrainTest, WorkedExamples) {
  expect_terrain_certificate(complete_graph(3), recognize_terrain(complete_graph(3), grid_recognizer()));
  const TerrainRecognition k2 = recognize_terrain(complete_graph(2), grid_recognizer());
  expect_terrain_certificate(complete_graph(2), k2);
  EXPECT_EQ(k2.terrain->size(), 2u);
  const TerrainRecognition star = recognize_terrain(kStar, grid_recognizer());
  EXPECT_EQ(star.verdict, Verdict::No);
  EXPECT_FALSE(star.terrain.has_value());
}

TEST(ReconstructTerrainTest, WorkedExamples) {
  expect_terrain_certificate(path(3), reconstruct_terrain(path(3), grid_recognizer()));
  const TerrainRecognition k4 = reconstruct_terrain(complete_graph(4), grid_recognizer());
  expect_terrain_certificate(complete_graph(4), k4);
  EXPECT_EQ(k4.terrain->size(), 4u);
  EXPECT_EQ(reconstruct_terrain(kStar, grid_recognizer()).verdict, Verdict::No);
}

TEST(ReconstructTerrainTest, PermutedInputOrder) {
  // Terrain (0,0),(1,2),(2,1),(3,3) relabelled so left-to-right order is lost.
  const OrderedGraph vg = make(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  const OrderedGraph g = relabel(vg, perm);
  expect_terrain_certificate(g, reconstruct_terrain(g, grid_recognizer()));
}

class LyingOracle final : public TerrainOracle {
 public:
  TerrainOracleResult query(const OrderedGraph& g) override {
    TerrainOracleResult r;
    r.kind = TerrainOracleResult::Kind::Realizable;
    std::vector<Point2> v;
    for (std::size_t i = 0; i < g.size(); ++i) v.emplace_back(Scalar(static_cast<long>(i)), Scalar(static_cast<long>(i * i)));
    r.terrain = validate_terrain(v);
    for (std::size_t i = 0; i < g.size(); ++i) r.order.push_back(i);
    return r;
  }
};

TEST(RecognizeConvexFanTest, BadOracleCertificateIsRejected) {
  // A convex-up chain sees everything; P3 plus a universal vertex is not K4.
  LyingOracle oracle;
  try {
    recognize_convex_fan(add_universal_vertex(path(3)), oracle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleCertificateInvalid);
  }
}

TEST(RecognizeTerrainTest, BadFanRecognizerIsRejected) {
  FanRecognizer liar = [](const OrderedGraph&) {
    FanRecognition r;
    r.verdict = Verdict::Yes;
    r.fan = validate_convex_fan(validate_polygon(oracle::pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 0);
    r.witness = {0, 1, 2, 3};
    return r;
  };
  try {
    recognize_terrain(path(3), liar);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CertificateInvalid);
  }
}

TEST(GridRealizerTest, GeneratedGridTerrainsAreFound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Terrain t = gen_terrain({seed, 2 + seed % 5, 5, 10000}, true);
    const OrderedGraph vg = visibility_graph_of_terrain(t);
    GridRealizerOptions opt;
    opt.height_bound = 5;
    const auto r = grid_realizer_oracle(vg, opt);
    ASSERT_EQ(r.kind, TerrainOracleResult::Kind::Realizable) << "seed " << seed;
    EXPECT_TRUE(graphs_equal_under_map(oracle::terrain_graph(vertices_of(*r.terrain)), vg, r.order));
  }
}

}  // namespace
}  // namespace fanvis
