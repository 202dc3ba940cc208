#include "fanvis/polygon.hpp"

#include <string>

#include "fanvis/error.hpp"

namespace fanvis {
namespace {

std::string edge_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool has_collinear_triple(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (orient2d(pts[a], pts[b], pts[c]) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

int Polygon::turn(std::size_t i) const {
  return orientation_ * orient2d(vertex(prev(i)), vertex(i), vertex(next(i)));
}

Scalar twice_signed_area(std::span<const Point2> vertices) {
  Scalar sum = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) sum += cross(vertices[i], vertices[(i + 1) % n]);
  return sum;
}

Polygon validate_polygon(std::vector<Point2> vertices, bool require_general_position) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "a polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) {
        throw Error(ErrorCode::DuplicateVertex,
                    "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                        " coincide");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2& c = vertices[j];
      const Point2& d = vertices[(j + 1) % n];
      const bool adjacent = (j == i + 1) || ((j + 1) % n == i);
      bool bad = false;
      if (adjacent) {
        // Consecutive edges share one endpoint; they must not fold back.
        const Point2& shared = (j == i + 1) ? b : a;
        const Point2& far_mine = (j == i + 1) ? a : b;
        const Point2& far_theirs = (j == i + 1) ? d : c;
        bad = on_closed_segment(shared, far_mine, far_theirs) ||
              on_closed_segment(shared, far_theirs, far_mine);
      } else {
        bad = segments_intersect(a, b, c, d);
      }
      if (bad) {
        throw Error(ErrorCode::NotSimple,
                    "edges " + edge_name(i, (i + 1) % n) + " and " +
                        edge_name(j, (j + 1) % n) + " intersect");
      }
    }
  }

  Polygon p;
  p.general_position_ = !has_collinear_triple(vertices);
  if (require_general_position && !p.general_position_) {
    throw Error(ErrorCode::NotGeneralPosition, "three polygon vertices are collinear");
  }
  p.orientation_ = sign(twice_signed_area(vertices)) >= 0 ? 1 : -1;
  p.vertices_ = std::move(vertices);
  return p;
}

ConvexFan validate_convex_fan(Polygon polygon, std::size_t kernel_index) {
  if (!polygon.general_position()) {
    throw Error(ErrorCode::NotGeneralPosition, "a convex fan must be in general position");
  }
  const std::size_t n = polygon.size();
  if (kernel_index >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "kernel index " + std::to_string(kernel_index) + " out of range");
  }
  if (polygon.turn(kernel_index) <= 0) {
    throw Error(ErrorCode::NotConvexAtKernel,
                "vertex " + std::to_string(kernel_index) + " is not convex");
  }
  const Point2& k = polygon.vertex(kernel_index);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = polygon.next(i);
    if (i == kernel_index || j == kernel_index) continue;
    if (polygon.orientation() * orient2d(polygon.vertex(i), polygon.vertex(j), k) <= 0) {
      throw Error(ErrorCode::NotInKernel,
                  "vertex " + std::to_string(kernel_index) +
                      " is not strictly inside the half-plane of edge " + edge_name(i, j));
    }
  }
  ConvexFan fan;
  fan.polygon_ = std::move(polygon);
  fan.kernel_ = kernel_index;
  return fan;
}

bool vertices_see_each_other(const Polygon& polygon, std::size_t i, std::size_t j) {
  const std::size_t n = polygon.size();
  if (i >= n || j >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range");
  }
  if (i == j) throw Error(ErrorCode::InvalidArgument, "a vertex pair needs i != j");
  if (!polygon.general_position()) {
    throw Error(ErrorCode::NotGeneralPosition,
                "polygon visibility requires general position");
  }
  if (polygon.next(i) == j || polygon.next(j) == i) return true;

  const Point2& a = polygon.vertex(i);
  const Point2& b = polygon.vertex(j);
  for (std::size_t e = 0; e < n; ++e) {
    if (segments_properly_intersect(a, b, polygon.vertex(e), polygon.vertex(e + 1))) {
      return false;
    }
  }
  // With general position and no crossing, the open diagonal is entirely
  // inside or entirely outside; its midpoint decides.
  const Point2 mid = Scalar(1, 2) * (a + b);
  return point_in_simple_polygon(mid, polygon.vertices()) == Location::Inside;
}

VisibilityGraph visibility_graph_of_polygon(const Polygon& polygon) {
  const std::size_t n = polygon.size();
  VisibilityGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_see_each_other(polygon, i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace fanvis
