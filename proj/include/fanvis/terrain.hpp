#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fanvis/exact.hpp"
#include "fanvis/graph.hpp"

namespace fanvis {

// Strictly x-monotone open polygonal chain, listed left to right.
class Terrain {
 public:
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i]; }
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  bool general_position() const noexcept { return general_position_; }

 private:
  friend Terrain validate_terrain(std::vector<Point2> vertices);
  std::vector<Point2> vertices_;
  bool general_position_ = true;
};

/// Throws TooFewVertices (m < 2) or NotMonotone. Collinear triples are
/// accepted and reported through general_position().
Terrain validate_terrain(std::vector<Point2> vertices);

/// Vertices i and j see each other iff every vertex strictly between them lies
/// strictly below the segment; a vertex on the segment blocks.
bool terrain_vertices_see_each_other(const Terrain& terrain, std::size_t i,
                                     std::size_t j);

VisibilityGraph visibility_graph_of_terrain(const Terrain& terrain);

}  // namespace fanvis
