#pragma once

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanvis/exact.hpp"
#include "fanvis/generators.hpp"
#include "fanvis/graph.hpp"
#include "fanvis/polygon.hpp"
#include "fanvis/projection.hpp"
#include "fanvis/terrain.hpp"

namespace fanvis::io {

using nlohmann::json;

// Parse failures throw Error(ParseError); geometric validation errors pass
// through from the validators unchanged.

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json points_to_json(std::span<const Point2> pts);
std::vector<Point2> points_from_json(const json& j);

// { "vertices": [["x","y"], ...], "kernel_index": k? }
json polygon_to_json(const Polygon& p, std::optional<std::size_t> kernel_index = std::nullopt);
json fan_to_json(const ConvexFan& fan);
json terrain_to_json(const Terrain& t);

struct PolygonInput {
  std::vector<Point2> vertices;
  std::optional<std::size_t> kernel_index;
};
PolygonInput polygon_input_from_json(const json& j);

// { "n": n, "edges": [[i,j], ...] }
json graph_to_json(const OrderedGraph& g);
OrderedGraph graph_from_json(const json& j);

// { "px": "1", "py": "0", "pz": "1" }
json projection_to_json(const CentralProjection& cp);
CentralProjection projection_from_json(const json& j);

json gen_config_to_json(const GenConfig& cfg);
GenConfig gen_config_from_json(const json& j);

json index_map_to_json(const FanTerrainMap& map);

// Kind of geometry held by a document, after unwrapping containers such as
// transform output, certificates, or generator output.
enum class DocumentKind { Polygon, Fan, Terrain, Graph };

struct Document {
  DocumentKind kind;
  json body;
};

// Finds the geometry inside `j`. Wrapper keys "fan", "terrain", "polygon",
// "graph" and "certificate" decide the kind; a bare {"vertices"} object is a
// fan when it has "kernel_index", otherwise `bare_default`. With a Polygon
// default, a vertex list with strictly increasing x is taken as a terrain.
Document unwrap_document(const json& j, DocumentKind bare_default);

json parse_text(const std::string& text);

}  // namespace fanvis::io
