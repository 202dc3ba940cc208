#include "fanvis/json_io.hpp"

#include <string>

#include "fanvis/error.hpp"

namespace fanvis::io {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::size_t index_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  malformed("coordinates must be rational strings like \"-3/4\", got " + j.dump());
}

json points_to_json(std::span<const Point2> pts) {
  json out = json::array();
  for (const Point2& p : pts) out.push_back(json::array({scalar_to_json(p.x), scalar_to_json(p.y)}));
  return out;
}

std::vector<Point2> points_from_json(const json& j) {
  if (!j.is_array()) malformed("\"vertices\" must be an array of [x, y] pairs");
  std::vector<Point2> pts;
  pts.reserve(j.size());
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 2) malformed("each vertex must be an [x, y] pair");
    pts.emplace_back(scalar_from_json(item[0]), scalar_from_json(item[1]));
  }
  return pts;
}

json polygon_to_json(const Polygon& p, std::optional<std::size_t> kernel_index) {
  json out{{"vertices", points_to_json(p.vertices())}};
  if (kernel_index) out["kernel_index"] = *kernel_index;
  return out;
}

json fan_to_json(const ConvexFan& fan) {
  return polygon_to_json(fan.polygon(), fan.kernel_index());
}

json terrain_to_json(const Terrain& t) { return json{{"vertices", points_to_json(t.vertices())}}; }

PolygonInput polygon_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) malformed("expected an object with \"vertices\"");
  PolygonInput in;
  in.vertices = points_from_json(j.at("vertices"));
  if (j.contains("kernel_index") && !j.at("kernel_index").is_null()) {
    in.kernel_index = index_from_json(j.at("kernel_index"), "kernel_index");
  }
  return in;
}

json graph_to_json(const OrderedGraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back(json::array({i, j}));
  return json{{"n", g.size()}, {"edges", edges}};
}

OrderedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    malformed("expected a graph object with \"n\" and \"edges\"");
  }
  const std::size_t n = index_from_json(j.at("n"), "n");
  if (!j.at("edges").is_array()) malformed("\"edges\" must be an array");
  OrderedGraph g(n);
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be an [i, j] pair");
    g.add_edge(index_from_json(e[0], "edge endpoint"), index_from_json(e[1], "edge endpoint"));
  }
  return g;
}

json projection_to_json(const CentralProjection& cp) {
  return json{{"px", scalar_to_json(cp.px())},
              {"py", scalar_to_json(cp.py())},
              {"pz", scalar_to_json(cp.pz())}};
}

CentralProjection projection_from_json(const json& j) {
  if (!j.is_object() || !j.contains("px") || !j.contains("py") || !j.contains("pz")) {
    malformed("projection config needs \"px\", \"py\" and \"pz\"");
  }
  return CentralProjection(scalar_from_json(j.at("px")), scalar_from_json(j.at("py")),
                           scalar_from_json(j.at("pz")));
}

json gen_config_to_json(const GenConfig& cfg) {
  return json{{"seed", cfg.seed},
              {"n", cfg.n},
              {"coordinate_bound", cfg.coordinate_bound},
              {"max_rejections", cfg.max_rejections}};
}

GenConfig gen_config_from_json(const json& j) {
  GenConfig cfg;
  try {
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.n = j.at("n").get<std::size_t>();
    cfg.coordinate_bound = j.value("coordinate_bound", cfg.coordinate_bound);
    cfg.max_rejections = j.value("max_rejections", cfg.max_rejections);
  } catch (const json::exception& e) {
    malformed(std::string("bad generator config: ") + e.what());
  }
  return cfg;
}

json index_map_to_json(const FanTerrainMap& map) { return map.terrain_to_fan; }

namespace {

// Bare vertex lists sorted by strictly increasing x read as terrains.
bool strictly_x_sorted(const json& vertices) {
  try {
    const std::vector<Point2> pts = points_from_json(vertices);
    if (pts.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (!(pts[i].x < pts[i + 1].x)) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Document unwrap_document(const json& j, DocumentKind bare_default) {
  if (!j.is_object()) malformed("expected a JSON object");
  if (j.contains("certificate") && j.at("certificate").is_object()) {
    return unwrap_document(j.at("certificate"), bare_default);
  }
  if (j.contains("fan")) return {DocumentKind::Fan, j.at("fan")};
  if (j.contains("terrain")) return {DocumentKind::Terrain, j.at("terrain")};
  if (j.contains("polygon")) {
    const json& body = j.at("polygon");
    const bool has_kernel = body.is_object() && body.contains("kernel_index");
    return {has_kernel ? DocumentKind::Fan : DocumentKind::Polygon, body};
  }
  if (j.contains("graph")) return {DocumentKind::Graph, j.at("graph")};
  if (j.contains("n") && j.contains("edges")) return {DocumentKind::Graph, j};
  if (j.contains("vertices")) {
    if (j.contains("kernel_index")) return {DocumentKind::Fan, j};
    if (bare_default == DocumentKind::Polygon && strictly_x_sorted(j.at("vertices"))) {
      return {DocumentKind::Terrain, j};
    }
    return {bare_default, j};
  }
  malformed("unrecognized document: expected polygon, fan, terrain or graph JSON");
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fanvis::io
