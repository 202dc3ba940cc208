#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fanvis/exact.hpp"
#include "fanvis/graph.hpp"

namespace fanvis {

// A validated simple polygon. Vertices keep the caller's cyclic order so that
// indices stay meaningful across index maps and JSON; orientation() tells
// predicates which side is the interior.
class Polygon {
 public:
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::span<const Point2> vertices() const noexcept { return vertices_; }

  // +1 counterclockwise, -1 clockwise.
  int orientation() const noexcept { return orientation_; }
  bool general_position() const noexcept { return general_position_; }

  std::size_t next(std::size_t i) const noexcept { return (i + 1) % size(); }
  std::size_t prev(std::size_t i) const noexcept { return (i + size() - 1) % size(); }

  // Sign of the turn at vertex i measured so that +1 means convex.
  int turn(std::size_t i) const;

 private:
  friend Polygon validate_polygon(std::vector<Point2> vertices,
                                  bool require_general_position);
  std::vector<Point2> vertices_;
  int orientation_ = 1;
  bool general_position_ = true;
};

/// Checks vertex count, distinctness, simplicity and (unless disabled) general
/// position. Throws Error with TooFewVertices, DuplicateVertex, NotSimple or
/// NotGeneralPosition.
Polygon validate_polygon(std::vector<Point2> vertices,
                         bool require_general_position = true);

// Twice the signed area (positive for counterclockwise).
Scalar twice_signed_area(std::span<const Point2> vertices);

// A polygon whose vertex kernel_index() is convex and sees the whole closure.
class ConvexFan {
 public:
  const Polygon& polygon() const noexcept { return polygon_; }
  std::size_t kernel_index() const noexcept { return kernel_; }
  const Point2& kernel() const { return polygon_.vertex(kernel_); }
  std::size_t size() const noexcept { return polygon_.size(); }

 private:
  friend ConvexFan validate_convex_fan(Polygon polygon, std::size_t kernel_index);
  Polygon polygon_;
  std::size_t kernel_ = 0;
};

/// Throws NotGeneralPosition, IndexOutOfRange, NotConvexAtKernel, or
/// NotInKernel (the message names the offending edge).
ConvexFan validate_convex_fan(Polygon polygon, std::size_t kernel_index);

/// True iff the segment v_i v_j lies in the closure of the polygon.
bool vertices_see_each_other(const Polygon& polygon, std::size_t i, std::size_t j);

VisibilityGraph visibility_graph_of_polygon(const Polygon& polygon);

}  // namespace fanvis
