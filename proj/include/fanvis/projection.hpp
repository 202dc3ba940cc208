#pragma once

#include <cstddef>
#include <vector>

#include "fanvis/exact.hpp"
#include "fanvis/polygon.hpp"
#include "fanvis/terrain.hpp"

namespace fanvis {

// Point of the plane x = 0, in that plane's (y, z) coordinates.
struct GammaPoint {
  Scalar y;
  Scalar z;
  friend bool operator==(const GammaPoint&, const GammaPoint&) = default;
};

// Point of the plane z = 0, in that plane's (x, y) coordinates.
struct OmegaPoint {
  Scalar x;
  Scalar y;
  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
};

// Central projection from the plane x = 0 to the plane z = 0 through the
// center (px, py, pz), with px > 0 and pz > 0.
//
// The vanishing line of the source plane is z = pz; the vanishing line of the
// target plane is x = px. The foot of the center on the source plane, (py, pz),
// is where the kernel vertex of a fan is placed.
class CentralProjection {
 public:
  // Throws InvalidProjection unless px > 0 and pz > 0.
  CentralProjection(Scalar px, Scalar py, Scalar pz);
  CentralProjection() : CentralProjection(1, 0, 1) {}

  const Scalar& px() const noexcept { return px_; }
  const Scalar& py() const noexcept { return py_; }
  const Scalar& pz() const noexcept { return pz_; }

  GammaPoint foot() const { return {py_, pz_}; }

  friend bool operator==(const CentralProjection&, const CentralProjection&) = default;

 private:
  Scalar px_, py_, pz_;
};

/// Intersection of the line through the center and a with the plane z = 0.
/// Throws VanishingPoint when a.z == pz.
OmegaPoint project(const CentralProjection& cp, const GammaPoint& a);

/// Inverse of project(). Throws VanishingPoint when q.x == px.
GammaPoint unproject(const CentralProjection& cp, const OmegaPoint& q);

/// Places the fan in the source plane by an invertible rational affine map so
/// that the kernel lands on the center's foot and every other vertex lies
/// strictly above the vanishing line. Result is indexed like the fan.
std::vector<GammaPoint> canonicalize_fan(const CentralProjection& cp, const ConvexFan& fan);

// Correspondence between terrain vertices and fan vertices.
struct FanTerrainMap {
  std::size_t kernel = 0;
  // terrain_to_fan[t] is the fan vertex matched with terrain vertex t.
  std::vector<std::size_t> terrain_to_fan;
  // True when the terrain lists the fan chain in reverse order.
  bool reversed = false;
};

struct FanToTerrain {
  Terrain terrain;
  FanTerrainMap map;
};

/// Projects the chain of non-kernel vertices (starting after the kernel) and
/// rotates the image so that it is x-monotone with the fan interior above it.
/// Throws MonotonicityViolation if the image is not strictly monotone.
FanToTerrain fan_to_terrain(const CentralProjection& cp, const ConvexFan& fan);

struct TerrainToFan {
  ConvexFan fan;
  FanTerrainMap map;
};

/// Inverse construction: kernel at index 0, terrain vertex t at index t + 1.
/// Throws NotGeneralPosition for terrains with collinear triples, and
/// ValidationFailure if the result is not a valid convex fan.
TerrainToFan terrain_to_fan(const CentralProjection& cp, const Terrain& terrain);

// The constant c used by terrain_to_fan: px + 1 - min(height).
Scalar terrain_lift(const CentralProjection& cp, const Terrain& terrain);

/// Recomputes both visibility graphs and checks that the fan graph minus the
/// kernel matches the terrain graph under the map, with the kernel universal.
bool correspondence_holds(const ConvexFan& fan, const Terrain& terrain,
                          const FanTerrainMap& map);

}  // namespace fanvis
