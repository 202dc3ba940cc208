#include "fanvis/terrain.hpp"

#include <string>
#include <utility>

#include "fanvis/error.hpp"

namespace fanvis {

Terrain validate_terrain(std::vector<Point2> vertices) {
  const std::size_t m = vertices.size();
  if (m < 2) {
    throw Error(ErrorCode::TooFewVertices,
                "a terrain needs at least 2 vertices, got " + std::to_string(m));
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (vertices[i].x >= vertices[i + 1].x) {
      throw Error(ErrorCode::NotMonotone,
                  "x must strictly increase, but vertex " + std::to_string(i + 1) +
                      " has x = " + to_string(vertices[i + 1].x) + " after " +
                      to_string(vertices[i].x));
    }
  }
  Terrain t;
  for (std::size_t a = 0; a < m && t.general_position_; ++a) {
    for (std::size_t b = a + 1; b < m && t.general_position_; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        if (orient2d(vertices[a], vertices[b], vertices[c]) == 0) {
          t.general_position_ = false;
          break;
        }
      }
    }
  }
  t.vertices_ = std::move(vertices);
  return t;
}

bool terrain_vertices_see_each_other(const Terrain& terrain, std::size_t i,
                                     std::size_t j) {
  if (i >= terrain.size() || j >= terrain.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "terrain vertex index out of range");
  }
  if (i == j) throw Error(ErrorCode::InvalidArgument, "a vertex pair needs i != j");
  if (i > j) std::swap(i, j);
  // x increases from i to j, so "strictly below the chord" is a clockwise turn.
  for (std::size_t k = i + 1; k < j; ++k) {
    if (orient2d(terrain.vertex(i), terrain.vertex(j), terrain.vertex(k)) >= 0) return false;
  }
  return true;
}

VisibilityGraph visibility_graph_of_terrain(const Terrain& terrain) {
  const std::size_t m = terrain.size();
  VisibilityGraph g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (terrain_vertices_see_each_other(terrain, i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace fanvis
