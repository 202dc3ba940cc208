#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

#include "fanvis/error.hpp"

namespace fanvis {

// Arbitrary-precision rational. GMP keeps every result in lowest terms with a
// positive denominator, so values compare and hash structurally.
using Scalar = mpq_class;

// Parses "num/den" or "num". Accepts a leading '-' or U+2212.
Scalar parse_scalar(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Scalar& value);

int sign(const Scalar& value);

struct Point2 {
  Scalar x;
  Scalar y;

  Point2() = default;
  Point2(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point2 operator*(const Scalar& s, const Point2& p) {
    return {s * p.x, s * p.y};
  }
};

Scalar cross(const Point2& u, const Point2& v);
Scalar dot(const Point2& u, const Point2& v);

// Counterclockwise 90 degree rotation: (x, y) -> (-y, x).
Point2 rotate90(const Point2& p);

/// Sign of (b - a) x (c - a): +1 for a left (counterclockwise) turn, 0 when
/// collinear, -1 for a right turn.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// True iff b lies strictly inside the segment ac.
bool point_between(const Point2& a, const Point2& b, const Point2& c);

/// True iff p lies on the closed segment ab.
bool on_closed_segment(const Point2& a, const Point2& b, const Point2& p);

/// True iff the segments cross at a single point interior to both. Touching at
/// an endpoint or overlapping collinearly does not count.
bool segments_properly_intersect(const Point2& p1, const Point2& p2,
                                 const Point2& q1, const Point2& q2);

/// True iff the closed segments share at least one point.
bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1,
                        const Point2& q2);

enum class Location { Inside, Outside };

/// Exact ray-casting point location. The boundary is a simple polygon given as
/// a cyclic vertex sequence in either orientation. Throws Error(BoundaryPoint)
/// when q lies on an edge or vertex.
Location point_in_simple_polygon(const Point2& q,
                                 std::span<const Point2> boundary);

}  // namespace fanvis
