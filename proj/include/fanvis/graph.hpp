#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fanvis {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph on {0..n-1} whose vertex order is meaningful.
// Dense adjacency matrix; intended for desk-scale n.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  explicit OrderedGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}
  OrderedGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return n_; }

  // Throws IndexOutOfRange for bad indices, InvalidArgument for loops.
  void add_edge(std::size_t i, std::size_t j);
  void remove_edge(std::size_t i, std::size_t j);
  bool has_edge(std::size_t i, std::size_t j) const noexcept {
    return i < n_ && j < n_ && adj_[i * n_ + j] != 0;
  }

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;

  // Edges as (i, j) with i < j, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  void check_index(std::size_t i) const;

  std::size_t n_ = 0;
  std::vector<unsigned char> adj_;
};

// Visibility graphs are ordered graphs whose vertex order is the source
// structure's order (cyclic polygon order, or left-to-right terrain order).
using VisibilityGraph = OrderedGraph;

OrderedGraph complete_graph(std::size_t n);

std::vector<std::size_t> universal_vertices(const OrderedGraph& g);

struct VertexRemoval {
  OrderedGraph graph;
  // old index -> new index; the removed vertex maps to nullopt.
  std::vector<std::optional<std::size_t>> reindex;
  // new index -> old index.
  std::vector<std::size_t> original;
};

VertexRemoval remove_vertex(const OrderedGraph& g, std::size_t v);

// New vertex gets index n and is adjacent to everything.
OrderedGraph add_universal_vertex(const OrderedGraph& g);

// Graph with vertex i renamed to perm[i].
OrderedGraph relabel(const OrderedGraph& g, std::span<const std::size_t> perm);

struct XViolation {
  std::size_t a, b, c, d;
  friend bool operator==(const XViolation&, const XViolation&) = default;
};

struct BarViolation {
  std::size_t a, c;
  friend bool operator==(const BarViolation&, const BarViolation&) = default;
};

/// X-property: for a < b < c < d, edges ac and bd force edge ad. Returns the
/// lexicographically least violating quadruple, or nullopt when it holds.
std::optional<XViolation> check_x_property(const OrderedGraph& g);

/// Bar property: every edge ac with c > a + 1 has a common neighbour b with
/// a < b < c. Returns the least violating edge, or nullopt when it holds.
std::optional<BarViolation> check_bar_property(const OrderedGraph& g);

bool is_persistent(const OrderedGraph& g);

/// True iff {i,j} in E(g) <=> {map[i], map[j]} in E(h). Throws NotABijection
/// unless map is a permutation of {0..n-1} and the sizes agree.
bool graphs_equal_under_map(const OrderedGraph& g, const OrderedGraph& h,
                            std::span<const std::size_t> map);

// Calls visit(path) for every Hamiltonian path of g, listing each undirected
// path once (first vertex < last vertex; single-vertex graphs yield {0}).
// Returning false from visit stops the enumeration. Returns the number of
// search nodes expanded.
std::size_t for_each_hamiltonian_path(
    const OrderedGraph& g,
    const std::function<bool(std::span<const std::size_t>)>& visit);

bool has_hamiltonian_path(const OrderedGraph& g);

}  // namespace fanvis
