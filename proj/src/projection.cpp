#include "fanvis/projection.hpp"

#include <algorithm>
#include <string>

#include "fanvis/error.hpp"

namespace fanvis {

CentralProjection::CentralProjection(Scalar px, Scalar py, Scalar pz)
    : px_(std::move(px)), py_(std::move(py)), pz_(std::move(pz)) {
  if (sign(px_) <= 0 || sign(pz_) <= 0) {
    throw Error(ErrorCode::InvalidProjection,
                "projection center needs px > 0 and pz > 0, got (" + to_string(px_) + ", " +
                    to_string(py_) + ", " + to_string(pz_) + ")");
  }
}

OmegaPoint project(const CentralProjection& cp, const GammaPoint& a) {
  if (a.z == cp.pz()) {
    throw Error(ErrorCode::VanishingPoint,
                "point (" + to_string(a.y) + ", " + to_string(a.z) + ") is on the vanishing line");
  }
  // Line p + t (a - p) with a = (0, a.y, a.z); its z-component vanishes at
  // t = pz / (pz - a.z).
  const Scalar t = cp.pz() / (cp.pz() - a.z);
  return {cp.px() * (1 - t), cp.py() + t * (a.y - cp.py())};
}

GammaPoint unproject(const CentralProjection& cp, const OmegaPoint& q) {
  if (q.x == cp.px()) {
    throw Error(ErrorCode::VanishingPoint,
                "point (" + to_string(q.x) + ", " + to_string(q.y) + ") is on the vanishing line");
  }
  // Line p + s (q - p) with q = (q.x, q.y, 0); its x-component vanishes at
  // s = px / (px - q.x).
  const Scalar s = cp.px() / (cp.px() - q.x);
  return {cp.py() + s * (q.y - cp.py()), cp.pz() * (1 - s)};
}

std::vector<GammaPoint> canonicalize_fan(const CentralProjection& cp, const ConvexFan& fan) {
  const Polygon& poly = fan.polygon();
  const std::size_t k = fan.kernel_index();
  const Point2& v0 = poly.vertex(k);
  const Point2 u = poly.vertex(poly.next(k)) - v0;
  const Point2 w = poly.vertex(poly.prev(k)) - v0;

  // n . u = n . w = |cross(u, w)| > 0, so n points into the cone at v0.
  const Point2 normal = sign(cross(u, w)) > 0 ? rotate90(u) - rotate90(w)
                                               : rotate90(w) - rotate90(u);
  const Point2 tangent = rotate90(normal);

  std::vector<GammaPoint> out;
  out.reserve(poly.size());
  for (const Point2& v : poly.vertices()) {
    const Point2 d = v - v0;
    out.push_back({cp.py() + dot(tangent, d), cp.pz() + dot(normal, d)});
  }
  return out;
}

FanToTerrain fan_to_terrain(const CentralProjection& cp, const ConvexFan& fan) {
  const std::size_t n = fan.size();
  const std::size_t k = fan.kernel_index();
  const std::vector<GammaPoint> placed = canonicalize_fan(cp, fan);

  std::vector<Point2> chain;
  std::vector<std::size_t> order;
  chain.reserve(n - 1);
  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t i = (k + step) % n;
    const OmegaPoint q = project(cp, placed[i]);
    // Rays from the kernel map to lines parallel to the x-axis of the target
    // plane; rotate so the chain is monotone in the first coordinate and the
    // fan interior (large x) is up.
    chain.emplace_back(-q.y, q.x);
    order.push_back(i);
  }

  FanTerrainMap map;
  map.kernel = k;
  if (chain.size() >= 2 && chain.front().x > chain.back().x) {
    std::reverse(chain.begin(), chain.end());
    std::reverse(order.begin(), order.end());
    map.reversed = true;
  }
  map.terrain_to_fan = std::move(order);

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].x >= chain[i + 1].x) {
      throw Error(ErrorCode::MonotonicityViolation,
                  "projected chain is not strictly monotone at terrain vertex " +
                      std::to_string(i + 1));
    }
  }
  return {validate_terrain(std::move(chain)), std::move(map)};
}

Scalar terrain_lift(const CentralProjection& cp, const Terrain& terrain) {
  Scalar lowest = terrain.vertex(0).y;
  for (const Point2& v : terrain.vertices()) lowest = std::min(lowest, v.y);
  return cp.px() + 1 - lowest;
}

TerrainToFan terrain_to_fan(const CentralProjection& cp, const Terrain& terrain) {
  if (!terrain.general_position()) {
    throw Error(ErrorCode::NotGeneralPosition, "terrain has three collinear vertices");
  }
  const Scalar lift = terrain_lift(cp, terrain);
  std::vector<Point2> vertices;
  vertices.reserve(terrain.size() + 1);
  vertices.emplace_back(cp.py(), cp.pz());
  for (const Point2& v : terrain.vertices()) {
    const GammaPoint g = unproject(cp, OmegaPoint{v.y + lift, -v.x});
    vertices.emplace_back(g.y, g.z);
  }

  FanTerrainMap map;
  map.kernel = 0;
  for (std::size_t t = 0; t < terrain.size(); ++t) map.terrain_to_fan.push_back(t + 1);

  try {
    ConvexFan fan = validate_convex_fan(validate_polygon(std::move(vertices)), 0);
    return {std::move(fan), std::move(map)};
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationFailure,
                "constructed fan failed validation: " + std::string(to_string(e.code())) +
                    ": " + e.what());
  }
}

bool correspondence_holds(const ConvexFan& fan, const Terrain& terrain,
                          const FanTerrainMap& map) {
  if (map.terrain_to_fan.size() != terrain.size() || fan.size() != terrain.size() + 1) {
    return false;
  }
  const VisibilityGraph fan_graph = visibility_graph_of_polygon(fan.polygon());
  if (fan_graph.degree(map.kernel) + 1 != fan.size()) return false;

  const VisibilityGraph terrain_graph = visibility_graph_of_terrain(terrain);
  const VertexRemoval rest = remove_vertex(fan_graph, map.kernel);
  std::vector<std::size_t> to_rest;
  to_rest.reserve(terrain.size());
  for (std::size_t f : map.terrain_to_fan) {
    if (f >= fan.size() || f == map.kernel) return false;
    to_rest.push_back(*rest.reindex[f]);
  }
  try {
    return graphs_equal_under_map(terrain_graph, rest.graph, to_rest);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace fanvis
