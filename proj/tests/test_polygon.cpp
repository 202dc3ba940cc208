#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "fanvis/generators.hpp"
#include "fanvis/polygon.hpp"
#include "oracles.hpp"

namespace fanvis {
namespace {

std::vector<Point2> square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }
std::vector<Point2> worked_fan() { return {{0, 0}, {3, 1}, {1, 1}, {1, 3}}; }

ErrorCode polygon_error(std::vector<Point2> v) {
  try {
    validate_polygon(std::move(v));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "polygon accepted";
  return ErrorCode::InvalidArgument;
}

ErrorCode fan_error(std::vector<Point2> v, std::size_t k) {
  try {
    validate_convex_fan(validate_polygon(std::move(v)), k);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "fan accepted";
  return ErrorCode::InvalidArgument;
}

std::set<Edge> edge_set(const OrderedGraph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

TEST(ValidatePolygonTest, AcceptsSquareInBothOrientations) {
  const Polygon ccw = validate_polygon(square());
  EXPECT_EQ(ccw.orientation(), 1);
  EXPECT_TRUE(ccw.general_position());
  std::vector<Point2> cw = square();
  std::reverse(cw.begin(), cw.end());
  EXPECT_EQ(validate_polygon(cw).orientation(), -1);
}

TEST(ValidatePolygonTest, RejectsBadInputs) {
  EXPECT_EQ(polygon_error({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), ErrorCode::NotSimple);
  EXPECT_EQ(polygon_error({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), ErrorCode::NotGeneralPosition);
  EXPECT_EQ(polygon_error({{0, 0}, {1, 0}}), ErrorCode::TooFewVertices);
  EXPECT_EQ(polygon_error({{0, 0}, {1, 0}, {1, 1}, {1, 0}}), ErrorCode::DuplicateVertex);
  // Degenerate triangle and a spike folding back along an edge.
  EXPECT_EQ(polygon_error({{0, 0}, {1, 0}, {2, 0}}), ErrorCode::NotSimple);
  EXPECT_EQ(polygon_error({{0, 0}, {4, 0}, {2, 0}, {2, 3}}), ErrorCode::NotSimple);
  // Vertex touching a non-incident edge.
  EXPECT_EQ(polygon_error({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}}), ErrorCode::NotSimple);
}

TEST(ValidatePolygonTest, PermissiveModeRecordsGeneralPositionFlag) {
  const Polygon p = validate_polygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}, false);
  EXPECT_FALSE(p.general_position());
}

TEST(ValidateConvexFanTest, WorkedExamples) {
  EXPECT_EQ(validate_convex_fan(validate_polygon(square()), 0).kernel_index(), 0u);
  const ConvexFan fan = validate_convex_fan(validate_polygon(worked_fan()), 0);
  EXPECT_EQ(fan.kernel(), Point2(0, 0));

  // Definitional check: the kernel sees every vertex and every edge midpoint.
  const std::vector<Point2> poly = worked_fan();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 mid = Scalar(1, 2) * (poly[i] + poly[(i + 1) % poly.size()]);
    EXPECT_TRUE(oracle::segment_in_closure(poly, poly[0], poly[i]));
    EXPECT_TRUE(oracle::segment_in_closure(poly, poly[0], mid));
  }
}

TEST(ValidateConvexFanTest, ReflexCandidateIsRejected) {
  // Interior angle at (1,1): the turn (3,1) -> (1,1) -> (1,3) is clockwise in a
  // counterclockwise polygon, i.e. reflex.
  const std::vector<Point2> poly = worked_fan();
  EXPECT_GT(oracle::det({0, 0}, {3, 1}, {1, 3}), 0);
  EXPECT_LT(oracle::det(poly[1], poly[2], poly[3]), 0);
  EXPECT_EQ(fan_error(poly, 2), ErrorCode::NotConvexAtKernel);
}

TEST(ValidateConvexFanTest, ConvexVertexOutsideKernel) {
  const std::vector<Point2> notch{{0, 0}, {4, 0}, {1, 2}, {4, 4}, {0, 4}};
  // (0,0) is convex but on the wrong side of edge (1,2)-(4,4).
  EXPECT_LT(oracle::det(notch[2], notch[3], notch[0]), 0);
  try {
    validate_convex_fan(validate_polygon(notch), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInKernel);
    EXPECT_NE(std::string(e.what()).find("(2,3)"), std::string::npos) << e.what();
  }
  EXPECT_FALSE(oracle::segment_in_closure(notch, notch[0], notch[3]));
}

TEST(ValidateConvexFanTest, KernelIndexOutOfRange) {
  EXPECT_EQ(fan_error(square(), 4), ErrorCode::IndexOutOfRange);
}

TEST(VisibilityTest, WorkedPairs) {
  const Polygon sq = validate_polygon(square());
  EXPECT_TRUE(vertices_see_each_other(sq, 0, 2));
  const Polygon fan = validate_polygon(worked_fan());
  EXPECT_FALSE(vertices_see_each_other(fan, 1, 3));
  EXPECT_TRUE(vertices_see_each_other(fan, 0, 2));
  EXPECT_FALSE(oracle::polygon_sees(worked_fan(), 1, 3));
  EXPECT_TRUE(oracle::polygon_sees(worked_fan(), 0, 2));
}

TEST(VisibilityTest, WorkedGraphs) {
  EXPECT_EQ(visibility_graph_of_polygon(validate_polygon(square())), complete_graph(4));
  const std::set<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  EXPECT_EQ(edge_set(visibility_graph_of_polygon(validate_polygon(worked_fan()))), expected);
  EXPECT_EQ(edge_set(oracle::polygon_graph(worked_fan())), expected);
  EXPECT_EQ(visibility_graph_of_polygon(validate_polygon({{0, 0}, {5, 1}, {2, 7}})),
            complete_graph(3));
}

TEST(VisibilityTest, OrientationDoesNotChangeTheGraph) {
  std::vector<Point2> cw = worked_fan();
  std::reverse(cw.begin() + 1, cw.end());  // (0,0),(1,3),(1,1),(3,1)
  const OrderedGraph g = visibility_graph_of_polygon(validate_polygon(cw));
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(validate_convex_fan(validate_polygon(cw), 0).kernel_index(), 0u);
}

TEST(VisibilityTest, NonFanPolygonMatchesOracle) {
  // Comb-shaped polygon with several reflex vertices.
  const std::vector<Point2> comb{{0, 0}, {9, 0}, {9, 5}, {7, 5}, {6, 1}, {5, 6},
                                 {3, 3}, {2, 7}, {1, 3}, {0, 8}};
  const Polygon p = validate_polygon(comb);
  EXPECT_EQ(visibility_graph_of_polygon(p), oracle::polygon_graph(comb));
}

class FanProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FanProperties, GraphInvariants) {
  for (std::size_t n = 3; n <= 10; ++n) {
    const GenConfig cfg{GetParam() * 31 + n, n, 40, 10000};
    const ConvexFan fan = gen_convex_fan(cfg);
    const OrderedGraph g = visibility_graph_of_polygon(fan.polygon());
    std::vector<Point2> raw(fan.polygon().vertices().begin(), fan.polygon().vertices().end());

    EXPECT_EQ(g, oracle::polygon_graph(raw)) << "n=" << n;
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(g.has_edge(i, (i + 1) % n));
    EXPECT_EQ(g.degree(fan.kernel_index()), n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(g.has_edge(i, j), g.has_edge(j, i));
    }
  }
}

TEST_P(FanProperties, AffineInvariance) {
  Rng rng(GetParam());
  for (std::size_t n = 4; n <= 9; ++n) {
    const ConvexFan fan = gen_convex_fan({GetParam() + 1000 * n, n, 30, 10000});
    const OrderedGraph g = visibility_graph_of_polygon(fan.polygon());
    Scalar a, b, c, d;
    do {
      a = rng.rational(-5, 5, 3);
      b = rng.rational(-5, 5, 3);
      c = rng.rational(-5, 5, 3);
      d = rng.rational(-5, 5, 3);
    } while (a * d - b * c == 0);
    const Point2 shift(rng.rational(-9, 9, 4), rng.rational(-9, 9, 4));
    std::vector<Point2> mapped;
    for (const Point2& v : fan.polygon().vertices()) {
      mapped.push_back(Point2(a * v.x + b * v.y, c * v.x + d * v.y) + shift);
    }
    EXPECT_EQ(visibility_graph_of_polygon(validate_polygon(mapped)), g);
  }
}

TEST_P(FanProperties, ConvexPolygonsAreComplete) {
  // Points on the parabola y = x^2 form a convex polygon in general position.
  Rng rng(GetParam());
  std::set<long> xs;
  while (xs.size() < 7) xs.insert(static_cast<long>(rng.uniform(-30, 30)));
  std::vector<Point2> convex;
  for (long x : xs) convex.emplace_back(x, x * x);
  std::rotate(convex.begin(), convex.begin() + static_cast<long>(GetParam() % 7), convex.end());
  EXPECT_EQ(visibility_graph_of_polygon(validate_polygon(convex)), complete_graph(7));
}

INSTANTIATE_TEST_SUITE_P(Seeds, FanProperties, ::testing::Values(1, 2, 3, 17, 99, 2026));

}  // namespace
}  // namespace fanvis
