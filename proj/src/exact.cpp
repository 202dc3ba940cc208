#include "fanvis/exact.hpp"

#include <algorithm>
#include <cctype>

namespace fanvis {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "malformed rational literal \"" + std::string(text) + "\"");
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with('-')) {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with('+')) {
    s.remove_prefix(1);
  } else if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  }

  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) bad_literal(text);

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) n = -n;
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Scalar& value) { return sgn(value); }

Scalar cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

Scalar dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

Point2 rotate90(const Point2& p) { return {-p.y, p.x}; }

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return sign(cross(b - a, c - a));
}

bool point_between(const Point2& a, const Point2& b, const Point2& c) {
  if (orient2d(a, b, c) != 0) return false;
  // Collinear: b is strictly inside ac iff (b - a) and (c - b) point the same
  // way along the line.
  return sign(dot(b - a, c - b)) > 0;
}

bool on_closed_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orient2d(a, b, p) != 0) return false;
  return sign(dot(p - a, p - b)) <= 0;
}

bool segments_properly_intersect(const Point2& p1, const Point2& p2,
                                 const Point2& q1, const Point2& q2) {
  const int o1 = orient2d(p1, p2, q1);
  const int o2 = orient2d(p1, p2, q2);
  const int o3 = orient2d(q1, q2, p1);
  const int o4 = orient2d(q1, q2, p2);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1,
                        const Point2& q2) {
  if (segments_properly_intersect(p1, p2, q1, q2)) return true;
  return on_closed_segment(p1, p2, q1) || on_closed_segment(p1, p2, q2) ||
         on_closed_segment(q1, q2, p1) || on_closed_segment(q1, q2, p2);
}

Location point_in_simple_polygon(const Point2& q,
                                 std::span<const Point2> boundary) {
  const std::size_t n = boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_closed_segment(boundary[i], boundary[(i + 1) % n], q)) {
      throw Error(ErrorCode::BoundaryPoint, "query point lies on the polygon boundary");
    }
  }

  // Pick a ray direction (1, k) whose supporting line through q misses every
  // vertex. Each vertex rules out at most one k, so k <= n always succeeds.
  Point2 dir(1, 0);
  for (long k = 0;; ++k) {
    dir = Point2(1, k);
    const Point2 far = q + dir;
    const bool clear = std::none_of(boundary.begin(), boundary.end(),
                                    [&](const Point2& v) { return orient2d(q, far, v) == 0; });
    if (clear) break;
  }

  const Point2 far = q + dir;
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = boundary[i];
    const Point2& b = boundary[(i + 1) % n];
    if (orient2d(q, far, a) * orient2d(q, far, b) >= 0) continue;
    // The edge crosses the ray's supporting line; solve q + t*dir on line ab.
    const Point2 ab = b - a;
    const Scalar t = cross(ab, a - q) / cross(ab, dir);
    if (sign(t) > 0) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

}  // namespace fanvis
