#include "fanvis/graph.hpp"

#include <algorithm>
#include <string>

#include "fanvis/error.hpp"

namespace fanvis {

OrderedGraph::OrderedGraph(std::size_t n, std::span<const Edge> edges)
    : OrderedGraph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

void OrderedGraph::check_index(std::size_t i) const {
  if (i >= n_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(i) + " out of range for graph of size " +
                    std::to_string(n_));
  }
}

void OrderedGraph::add_edge(std::size_t i, std::size_t j) {
  check_index(i);
  check_index(j);
  if (i == j) {
    throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(i));
  }
  adj_[i * n_ + j] = 1;
  adj_[j * n_ + i] = 1;
}

void OrderedGraph::remove_edge(std::size_t i, std::size_t j) {
  check_index(i);
  check_index(j);
  adj_[i * n_ + j] = 0;
  adj_[j * n_ + i] = 0;
}

std::size_t OrderedGraph::degree(std::size_t v) const {
  check_index(v);
  return static_cast<std::size_t>(
      std::count(adj_.begin() + static_cast<std::ptrdiff_t>(v * n_),
                 adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * n_), 1));
}

std::size_t OrderedGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<Edge> OrderedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

OrderedGraph complete_graph(std::size_t n) {
  OrderedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

std::vector<std::size_t> universal_vertices(const OrderedGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 == g.size()) out.push_back(v);
  }
  return out;
}

VertexRemoval remove_vertex(const OrderedGraph& g, std::size_t v) {
  if (v >= g.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "cannot remove vertex " + std::to_string(v) + " from graph of size " +
                    std::to_string(g.size()));
  }
  VertexRemoval r;
  r.reindex.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == v) continue;
    r.reindex[i] = r.original.size();
    r.original.push_back(i);
  }
  r.graph = OrderedGraph(g.size() - 1);
  for (const auto& [i, j] : g.edges()) {
    if (i != v && j != v) r.graph.add_edge(*r.reindex[i], *r.reindex[j]);
  }
  return r;
}

OrderedGraph add_universal_vertex(const OrderedGraph& g) {
  const std::size_t n = g.size();
  OrderedGraph out(n + 1);
  for (const auto& [i, j] : g.edges()) out.add_edge(i, j);
  for (std::size_t i = 0; i < n; ++i) out.add_edge(i, n);
  return out;
}

OrderedGraph relabel(const OrderedGraph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.size()) {
    throw Error(ErrorCode::NotABijection, "relabeling has wrong length");
  }
  OrderedGraph out(g.size());
  for (const auto& [i, j] : g.edges()) out.add_edge(perm[i], perm[j]);
  return out;
}

std::optional<XViolation> check_x_property(const OrderedGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!g.has_edge(a, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (g.has_edge(b, d) && !g.has_edge(a, d)) return XViolation{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<BarViolation> check_bar_property(const OrderedGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 2; c < n; ++c) {
      if (!g.has_edge(a, c)) continue;
      bool witnessed = false;
      for (std::size_t b = a + 1; b < c && !witnessed; ++b) {
        witnessed = g.has_edge(a, b) && g.has_edge(b, c);
      }
      if (!witnessed) return BarViolation{a, c};
    }
  }
  return std::nullopt;
}

bool is_persistent(const OrderedGraph& g) {
  return !check_x_property(g) && !check_bar_property(g);
}

bool graphs_equal_under_map(const OrderedGraph& g, const OrderedGraph& h,
                            std::span<const std::size_t> map) {
  const std::size_t n = g.size();
  if (h.size() != n || map.size() != n) {
    throw Error(ErrorCode::NotABijection, "graph sizes and map length disagree");
  }
  std::vector<bool> hit(n, false);
  for (std::size_t target : map) {
    if (target >= n || hit[target]) {
      throw Error(ErrorCode::NotABijection, "map is not a permutation");
    }
    hit[target] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j) != h.has_edge(map[i], map[j])) return false;
    }
  }
  return true;
}

std::size_t for_each_hamiltonian_path(
    const OrderedGraph& g,
    const std::function<bool(std::span<const std::size_t>)>& visit) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;
  bool stop = false;

  std::function<void()> extend = [&]() {
    ++nodes;
    if (path.size() == n) {
      if (path.front() <= path.back()) stop = !visit(path);
      return;
    }
    const std::size_t last = path.back();
    for (std::size_t next = 0; next < n && !stop; ++next) {
      if (used[next] || !g.has_edge(last, next)) continue;
      // The last vertex must exceed the first; prune when only `next` remains
      // and it cannot close the path in canonical direction.
      if (path.size() + 1 == n && next < path.front()) continue;
      used[next] = true;
      path.push_back(next);
      extend();
      path.pop_back();
      used[next] = false;
    }
  };

  for (std::size_t start = 0; start < n && !stop; ++start) {
    used[start] = true;
    path.push_back(start);
    extend();
    path.pop_back();
    used[start] = false;
  }
  return nodes;
}

bool has_hamiltonian_path(const OrderedGraph& g) {
  bool found = false;
  for_each_hamiltonian_path(g, [&](std::span<const std::size_t>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace fanvis
