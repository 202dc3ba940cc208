#include <gtest/gtest.h>

#include "fanvis/error.hpp"
#include "fanvis/generators.hpp"
#include "fanvis/graph.hpp"

namespace fanvis {
namespace {

OrderedGraph make(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return OrderedGraph(n, e);
}

OrderedGraph path(std::size_t n) {
  OrderedGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

OrderedGraph cycle(std::size_t n) {
  OrderedGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

TEST(OrderedGraphTest, RejectsLoopsAndBadIndices) {
  OrderedGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  g.add_edge(0, 2);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(UniversalVerticesTest, WorkedExamples) {
  EXPECT_EQ(universal_vertices(complete_graph(4)), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(universal_vertices(path(3)), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(universal_vertices(cycle(5)).empty());
}

TEST(RemoveVertexTest, WorkedExamples) {
  EXPECT_EQ(remove_vertex(complete_graph(4), 0).graph, complete_graph(3));
  const VertexRemoval r = remove_vertex(path(3), 1);
  EXPECT_EQ(r.graph, OrderedGraph(2));
  EXPECT_EQ(r.original, (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(r.reindex[1].has_value());
  EXPECT_EQ(*r.reindex[2], 1u);
  EXPECT_EQ(remove_vertex(make(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 3}}), 3).graph,
            complete_graph(3));
  try {
    remove_vertex(path(3), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(AddUniversalVertexTest, WorkedExamples) {
  EXPECT_EQ(add_universal_vertex(OrderedGraph(2)), make(3, {{0, 2}, {1, 2}}));
  EXPECT_EQ(add_universal_vertex(complete_graph(3)), complete_graph(4));
  EXPECT_EQ(add_universal_vertex(path(3)), make(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
}

TEST(XPropertyTest, WorkedExamples) {
  const auto v = check_x_property(make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (XViolation{0, 1, 2, 3}));
  EXPECT_FALSE(check_x_property(make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}})));
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_FALSE(check_x_property(complete_graph(n)));
}

TEST(XPropertyTest, ReturnsLeastViolation) {
  // Two violations: (0,1,2,3) and (1,2,3,4); the first is reported.
  OrderedGraph g = path(5);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  EXPECT_EQ(*check_x_property(g), (XViolation{0, 1, 2, 3}));
  // Closing 0-3 exposes (0,2,3,4) before (1,2,3,4).
  g.add_edge(0, 3);
  EXPECT_EQ(*check_x_property(g), (XViolation{0, 2, 3, 4}));
  g.add_edge(0, 4);
  EXPECT_EQ(*check_x_property(g), (XViolation{1, 2, 3, 4}));
}

TEST(BarPropertyTest, WorkedExamples) {
  EXPECT_FALSE(check_bar_property(make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}})));
  const auto v = check_bar_property(make(3, {{0, 2}}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, (BarViolation{0, 2}));
  EXPECT_FALSE(check_bar_property(path(4)));
}

TEST(PersistenceTest, WorkedExamples) {
  EXPECT_TRUE(is_persistent(make(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}})));
  EXPECT_FALSE(is_persistent(make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}})));
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_persistent(complete_graph(n)));
}

TEST(PersistenceTest, VerdictDependsOnOrder) {
  const OrderedGraph g = make(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  EXPECT_TRUE(is_persistent(g));
  // Swap vertices 0 and 1: edge {1,3} becomes {0,3} with no common neighbour in
  // between.
  const std::vector<std::size_t> swap01{1, 0, 2, 3};
  const OrderedGraph permuted = relabel(g, swap01);
  EXPECT_FALSE(is_persistent(permuted));
  EXPECT_TRUE(check_bar_property(permuted).has_value());
}

TEST(GraphsEqualUnderMapTest, WorkedExamples) {
  const std::vector<std::size_t> id3{0, 1, 2};
  EXPECT_TRUE(graphs_equal_under_map(complete_graph(3), complete_graph(3), id3));
  const std::vector<std::size_t> swap{1, 0, 2};
  EXPECT_TRUE(graphs_equal_under_map(path(3), make(3, {{0, 1}, {0, 2}}), swap));
  EXPECT_FALSE(graphs_equal_under_map(path(3), complete_graph(3), id3));
  const std::vector<std::size_t> bad{0, 0, 2};
  try {
    graphs_equal_under_map(path(3), path(3), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotABijection);
  }
}

TEST(HamiltonianPathTest, CountsPathsUpToReversal) {
  std::size_t count = 0;
  for_each_hamiltonian_path(complete_graph(4), [&](std::span<const std::size_t> p) {
    EXPECT_LT(p.front(), p.back());
    ++count;
    return true;
  });
  EXPECT_EQ(count, 12u);  // 4!/2
  EXPECT_FALSE(has_hamiltonian_path(make(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_TRUE(has_hamiltonian_path(cycle(6)));
  EXPECT_TRUE(has_hamiltonian_path(OrderedGraph(1)));
  EXPECT_FALSE(has_hamiltonian_path(OrderedGraph(2)));
}

TEST(GraphProperties, RemoveUndoesAddUniversal) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(0, 9));
    OrderedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform(0, 1) == 1) g.add_edge(i, j);
    EXPECT_EQ(remove_vertex(add_universal_vertex(g), n).graph, g);
  }
}

}  // namespace
}  // namespace fanvis
