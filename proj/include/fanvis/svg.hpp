#pragma once

#include <optional>
#include <string>

#include "fanvis/graph.hpp"
#include "fanvis/polygon.hpp"
#include "fanvis/projection.hpp"
#include "fanvis/terrain.hpp"

namespace fanvis::svg {

struct RenderOptions {
  bool show_visibility = false;
  bool show_vanishing = false;
  int precision = 3;     // decimals printed; display only
  double canvas = 400.0;  // longest side of the drawing, in SVG units
  CentralProjection projection{};
};

// Output is a pure function of the inputs: identical calls give identical bytes.

// Polygon boundary, optional dashed visibility graph. With show_vanishing the
// polygon must be a fan and is drawn in its canonical placement together with
// the vanishing line.
std::string render_polygon(const Polygon& polygon, std::optional<std::size_t> kernel,
                           const RenderOptions& options);

std::string render_fan(const ConvexFan& fan, const RenderOptions& options);

// Polyline, optional dashed visibility graph; show_vanishing draws the image of
// the vanishing line used when lifting the terrain to a fan.
std::string render_terrain(const Terrain& terrain, const RenderOptions& options);

// Vertices evenly spaced on a circle in index order.
std::string render_graph(const OrderedGraph& graph, const RenderOptions& options);

}  // namespace fanvis::svg
