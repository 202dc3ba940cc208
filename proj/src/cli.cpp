#include "fanvis/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "fanvis/error.hpp"
#include "fanvis/generators.hpp"
#include "fanvis/json_io.hpp"
#include "fanvis/reduction.hpp"
#include "fanvis/svg.hpp"
#include "fanvis/verify.hpp"

namespace fanvis::cli {
namespace {

using io::json;
using io::DocumentKind;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string projection_file;
  bool paranoid = false;
  std::size_t jobs = 1;
  bool json_output = false;
};

struct OracleOptions {
  std::string target = "fan";
  std::string oracle = "grid";
  std::string mode = "unit-x";
  long height_bound = 4;
  long width = 0;
  std::size_t node_budget = 20'000'000;
  long time_budget_ms = 0;
};

struct RenderFlags {
  bool show_vis = false;
  bool show_vanishing = false;
  int precision = 3;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  GlobalOptions global;

  std::string read_input(const std::string& path) {
    if (path == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  io::Document load(const std::string& path, const std::string& kind, DocumentKind fallback) {
    const json doc = io::parse_text(read_input(path));
    if (kind.empty()) return io::unwrap_document(doc, fallback);
    static const std::map<std::string, DocumentKind> kinds{{"polygon", DocumentKind::Polygon},
                                                           {"fan", DocumentKind::Fan},
                                                           {"terrain", DocumentKind::Terrain},
                                                           {"graph", DocumentKind::Graph}};
    const DocumentKind wanted = kinds.at(kind);
    io::Document d = io::unwrap_document(doc, wanted);
    // An explicit --kind overrides what a bare document looks like.
    if (d.kind != DocumentKind::Graph && wanted != DocumentKind::Graph) d.kind = wanted;
    return d;
  }

  CentralProjection projection() {
    if (global.projection_file.empty()) return {};
    return io::projection_from_json(io::parse_text(read_input(global.projection_file)));
  }

  void emit(const json& j) { out_ << j.dump() << "\n"; }
  void emit_text(const std::string& s) { out_ << s; }

  int report_error(const Error& e) {
    err_ << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (global.json_output) {
      emit(json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    }
    switch (e.code()) {
      case ErrorCode::ParanoidCheckFailed:
      case ErrorCode::MonotonicityViolation:
      case ErrorCode::ValidationFailure:
      case ErrorCode::OracleCertificateInvalid:
      case ErrorCode::CertificateInvalid:
        return kFail;
      default:
        return kInputError;
    }
  }

  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

Polygon polygon_of(const io::Document& d) {
  return validate_polygon(io::polygon_input_from_json(d.body).vertices);
}

ConvexFan fan_of(const io::Document& d) {
  io::PolygonInput in = io::polygon_input_from_json(d.body);
  if (!in.kernel_index) {
    throw Error(ErrorCode::InvalidArgument, "a fan needs \"kernel_index\"");
  }
  return validate_convex_fan(validate_polygon(std::move(in.vertices)), *in.kernel_index);
}

Terrain terrain_of(const io::Document& d) {
  return validate_terrain(io::polygon_input_from_json(d.body).vertices);
}

std::string kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::Polygon: return "polygon";
    case DocumentKind::Fan: return "fan";
    case DocumentKind::Terrain: return "terrain";
    case DocumentKind::Graph: return "graph";
  }
  return "unknown";
}

int cmd_validate(Session& s, const std::string& input, const std::string& kind) {
  const io::Document d = s.load(input, kind, DocumentKind::Polygon);
  json out{{"valid", true}, {"kind", kind_name(d.kind)}};
  switch (d.kind) {
    case DocumentKind::Polygon: {
      const Polygon p = polygon_of(d);
      out["n"] = p.size();
      out["general_position"] = p.general_position();
      out["orientation"] = p.orientation() > 0 ? "ccw" : "cw";
      break;
    }
    case DocumentKind::Fan: {
      const ConvexFan f = fan_of(d);
      out["n"] = f.size();
      out["kernel_index"] = f.kernel_index();
      out["general_position"] = true;
      out["orientation"] = f.polygon().orientation() > 0 ? "ccw" : "cw";
      break;
    }
    case DocumentKind::Terrain: {
      const Terrain t = terrain_of(d);
      out["n"] = t.size();
      out["general_position"] = t.general_position();
      break;
    }
    case DocumentKind::Graph: {
      const OrderedGraph g = io::graph_from_json(d.body);
      out["n"] = g.size();
      out["edges"] = g.edge_count();
      break;
    }
  }
  s.emit(out);
  return kPass;
}

int cmd_visgraph(Session& s, const std::string& input, const std::string& kind) {
  const io::Document d = s.load(input, kind, DocumentKind::Polygon);
  switch (d.kind) {
    case DocumentKind::Polygon: s.emit(io::graph_to_json(visibility_graph_of_polygon(polygon_of(d)))); break;
    case DocumentKind::Fan: s.emit(io::graph_to_json(visibility_graph_of_polygon(fan_of(d).polygon()))); break;
    case DocumentKind::Terrain: s.emit(io::graph_to_json(visibility_graph_of_terrain(terrain_of(d)))); break;
    case DocumentKind::Graph:
      throw Error(ErrorCode::InvalidArgument, "visgraph needs a polygon or terrain, not a graph");
  }
  return kPass;
}

int cmd_transform(Session& s, const std::string& input, const std::string& kind) {
  const io::Document d = s.load(input, kind, DocumentKind::Terrain);
  const CentralProjection cp = s.projection();
  if (d.kind == DocumentKind::Fan) {
    const ConvexFan fan = fan_of(d);
    FanToTerrain ft = fan_to_terrain(cp, fan);
    if (s.global.paranoid && !correspondence_holds(fan, ft.terrain, ft.map)) {
      throw Error(ErrorCode::ParanoidCheckFailed, "fan and terrain visibility graphs differ");
    }
    s.emit(json{{"terrain", io::terrain_to_json(ft.terrain)},
                {"index_map", io::index_map_to_json(ft.map)},
                {"kernel_index", ft.map.kernel},
                {"reversed", ft.map.reversed},
                {"projection", io::projection_to_json(cp)}});
    return kPass;
  }
  if (d.kind == DocumentKind::Terrain) {
    const Terrain terrain = terrain_of(d);
    TerrainToFan tf = terrain_to_fan(cp, terrain);
    if (s.global.paranoid && !correspondence_holds(tf.fan, terrain, tf.map)) {
      throw Error(ErrorCode::ParanoidCheckFailed, "fan and terrain visibility graphs differ");
    }
    s.emit(json{{"fan", io::fan_to_json(tf.fan)},
                {"index_map", io::index_map_to_json(tf.map)},
                {"kernel_index", tf.map.kernel},
                {"reversed", tf.map.reversed},
                {"projection", io::projection_to_json(cp)}});
    return kPass;
  }
  throw Error(ErrorCode::InvalidArgument,
              "transform needs a fan (with kernel_index) or a terrain, got " + kind_name(d.kind));
}

int cmd_verify(Session& s, VerifyConfig cfg) {
  cfg.seed = s.global.seed;
  cfg.jobs = s.global.jobs;
  cfg.projection = s.projection();
  const RunReport report = verify_theorem1(cfg);
  if (s.global.json_output) {
    s.emit(report.to_json());
  } else {
    std::ostringstream text;
    text << "verify-theorem1: " << report.outcome << " (" << cfg.count << " fans, " << cfg.count
         << " terrains, " << report.stats.at("checks").get<std::size_t>() << " checks, "
         << report.counterexamples << " counterexamples)\n";
    if (report.counterexample) text << "first counterexample: " << report.counterexample->dump() << "\n";
    s.emit_text(text.str());
  }
  return report.outcome == "pass" ? kPass : kFail;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kPass;
    case Verdict::No: return kFail;
    case Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

std::unique_ptr<TerrainOracle> make_oracle(const OracleOptions& o) {
  if (o.oracle == "persistence") return std::make_unique<PersistenceFilterOracle>();
  GridRealizerOptions g;
  g.mode = o.mode == "full-grid" ? GridRealizerOptions::Mode::FullGrid
                                 : GridRealizerOptions::Mode::UnitX;
  g.height_bound = o.height_bound;
  g.width = o.width;
  g.node_budget = o.node_budget;
  if (o.time_budget_ms > 0) g.time_budget = std::chrono::milliseconds(o.time_budget_ms);
  return std::make_unique<GridRealizerOracle>(g);
}

json stats_json(const SearchStats& st, std::chrono::steady_clock::duration elapsed) {
  return json{{"orders_tried", st.orders_tried},
              {"nodes", st.nodes},
              {"oracle_calls", st.oracle_calls},
              {"elapsed_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
}

int cmd_recognize(Session& s, const std::string& input, const OracleOptions& o, bool reconstruct) {
  const io::Document d = s.load(input, "graph", DocumentKind::Graph);
  const OrderedGraph g = io::graph_from_json(d.body);
  const CentralProjection cp = s.projection();
  auto oracle = make_oracle(o);
  const auto start = std::chrono::steady_clock::now();

  Verdict verdict;
  std::string reason;
  SearchStats stats;
  std::optional<json> certificate;
  if (o.target == "fan") {
    FanRecognition r = reconstruct ? reconstruct_convex_fan(g, *oracle, cp)
                                   : recognize_convex_fan(g, *oracle, cp);
    verdict = r.verdict;
    reason = r.reason;
    stats = r.stats;
    if (r.verdict == Verdict::Yes) {
      certificate = json{{"fan", io::fan_to_json(*r.fan)}, {"witness", r.witness}};
    }
  } else {
    FanRecognizer fans = [&](const OrderedGraph& h) { return recognize_convex_fan(h, *oracle, cp); };
    TerrainRecognition r = reconstruct ? reconstruct_terrain(g, fans, cp)
                                       : recognize_terrain(g, fans, cp);
    verdict = r.verdict;
    reason = r.reason;
    stats = r.stats;
    if (r.verdict == Verdict::Yes) {
      certificate = json{{"terrain", io::terrain_to_json(*r.terrain)}, {"witness", r.witness}};
    }
  }

  if (reconstruct && certificate) {
    s.emit(*certificate);
    return kPass;
  }
  json out{{"verdict", std::string(to_string(verdict))},
           {"reason", reason},
           {"stats", stats_json(stats, std::chrono::steady_clock::now() - start)}};
  if (certificate) out["certificate"] = *certificate;
  s.emit(out);
  return verdict_exit(verdict);
}

int cmd_check_persistence(Session& s, const std::string& input) {
  const io::Document d = s.load(input, "graph", DocumentKind::Graph);
  const OrderedGraph g = io::graph_from_json(d.body);
  json out;
  const auto x = check_x_property(g);
  const auto bar = check_bar_property(g);
  out["x_property"] = x ? json{{"holds", false}, {"violation", {x->a, x->b, x->c, x->d}}}
                        : json{{"holds", true}};
  out["bar_property"] = bar ? json{{"holds", false}, {"violation", {bar->a, bar->c}}}
                            : json{{"holds", true}};
  out["persistent"] = !x && !bar;
  s.emit(out);
  return !x && !bar ? kPass : kFail;
}

int cmd_gen(Session& s, const std::string& kind, GenConfig cfg, bool dense) {
  cfg.seed = s.global.seed;
  if (kind == "fan") {
    s.emit(json{{"config", io::gen_config_to_json(cfg)}, {"fan", io::fan_to_json(gen_convex_fan(cfg))}});
  } else {
    json config = io::gen_config_to_json(cfg);
    config["grid"] = !dense;
    s.emit(json{{"config", config}, {"terrain", io::terrain_to_json(gen_terrain(cfg, !dense))}});
  }
  return kPass;
}

int cmd_render(Session& s, const std::string& input, const std::string& kind, const RenderFlags& f) {
  const io::Document d = s.load(input, kind, DocumentKind::Polygon);
  svg::RenderOptions opt;
  opt.show_visibility = f.show_vis;
  opt.show_vanishing = f.show_vanishing;
  opt.precision = f.precision;
  opt.projection = s.projection();
  switch (d.kind) {
    case DocumentKind::Polygon: s.emit_text(svg::render_polygon(polygon_of(d), std::nullopt, opt)); break;
    case DocumentKind::Fan: s.emit_text(svg::render_fan(fan_of(d), opt)); break;
    case DocumentKind::Terrain: s.emit_text(svg::render_terrain(terrain_of(d), opt)); break;
    case DocumentKind::Graph: s.emit_text(svg::render_graph(io::graph_from_json(d.body), opt)); break;
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Session session(in, out, err);
  GlobalOptions& g = session.global;

  CLI::App app{"Exact visibility graphs of convex fans and terrains", "fanvis"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--projection", g.projection_file,
                 "Projection center JSON {\"px\",\"py\",\"pz\"} (default 1,0,1)");
  app.add_flag("--paranoid", g.paranoid, "Re-verify visibility graphs after every transform");
  app.add_option("--jobs", g.jobs, "Worker threads for batch verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", g.json_output, "Machine-readable reports and errors");

  const std::vector<std::string> kinds{"polygon", "fan", "terrain", "graph"};
  std::string input = "-";
  std::string kind;

  auto* validate = app.add_subcommand("validate", "Validate a polygon, fan, terrain or graph");
  validate->add_option("input", input, "Input JSON file, or - for stdin");
  validate->add_option("--kind", kind)->check(CLI::IsMember(kinds));

  auto* visgraph = app.add_subcommand("visgraph", "Visibility graph of a polygon or terrain");
  visgraph->add_option("input", input, "Input JSON file, or - for stdin");
  visgraph->add_option("--kind", kind)->check(CLI::IsMember(kinds));

  auto* transform = app.add_subcommand("transform", "Fan -> terrain or terrain -> fan");
  transform->add_option("input", input, "Input JSON file, or - for stdin");
  transform->add_option("--kind", kind)->check(CLI::IsMember(std::vector<std::string>{"fan", "terrain"}));

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify-theorem1",
                                    "Batch-check the fan/terrain visibility correspondence");
  verify->add_option("--count", verify_cfg.count, "Fans and terrains to generate")->capture_default_str();
  verify->add_option("--max-n", verify_cfg.max_n, "Largest instance size")
      ->check(CLI::Range(3, 64))
      ->capture_default_str();
  verify->add_option("--centers", verify_cfg.centers, "Projection centers per instance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--bound", verify_cfg.coordinate_bound, "Generator coordinate bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_flag("--sabotage", verify_cfg.sabotage)->group("");

  OracleOptions oracle;
  auto add_oracle_options = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Graph JSON file, or - for stdin");
    cmd->add_option("--target", oracle.target)
        ->check(CLI::IsMember(std::vector<std::string>{"fan", "terrain"}))
        ->capture_default_str();
    cmd->add_option("--oracle", oracle.oracle)
        ->check(CLI::IsMember(std::vector<std::string>{"grid", "persistence"}))
        ->capture_default_str();
    cmd->add_option("--mode", oracle.mode)
        ->check(CLI::IsMember(std::vector<std::string>{"unit-x", "full-grid"}))
        ->capture_default_str();
    cmd->add_option("--height-bound", oracle.height_bound, "Grid heights in [0, H)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--width", oracle.width, "Full-grid x range [0, W); 0 = 2n");
    cmd->add_option("--node-budget", oracle.node_budget)->capture_default_str();
    cmd->add_option("--time-budget-ms", oracle.time_budget_ms, "0 = unlimited");
  };
  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is a fan/terrain visibility graph");
  add_oracle_options(recognize);
  auto* reconstruct = app.add_subcommand("reconstruct", "Build a fan/terrain realizing a graph");
  add_oracle_options(reconstruct);

  auto* persistence = app.add_subcommand("check-persistence", "X-property and Bar property of an ordered graph");
  persistence->add_option("input", input, "Graph JSON file, or - for stdin");

  GenConfig gen_cfg;
  std::string gen_kind = "fan";
  bool dense = false;
  auto* gen = app.add_subcommand("gen", "Generate a random fan or terrain");
  gen->add_option("kind", gen_kind)->check(CLI::IsMember(std::vector<std::string>{"fan", "terrain"}));
  gen->add_option("--n", gen_cfg.n, "Vertex count")->capture_default_str();
  gen->add_option("--bound", gen_cfg.coordinate_bound, "Coordinate bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--max-rejections", gen_cfg.max_rejections)->capture_default_str();
  gen->add_flag("--dense", dense, "Rational terrain heights instead of integer grid heights");

  RenderFlags render_flags;
  auto* render = app.add_subcommand("render", "Render a polygon, fan, terrain or graph as SVG");
  render->add_option("input", input, "Input JSON file, or - for stdin");
  render->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  render->add_flag("--show-vis", render_flags.show_vis, "Overlay the visibility graph (dashed)");
  render->add_flag("--show-vanishing", render_flags.show_vanishing, "Draw the vanishing line");
  render->add_option("--precision", render_flags.precision, "Decimals in SVG coordinates")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();

  std::vector<std::string> argv_storage{"fanvis"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(session, input, kind);
    if (*visgraph) return cmd_visgraph(session, input, kind);
    if (*transform) return cmd_transform(session, input, kind);
    if (*verify) return cmd_verify(session, verify_cfg);
    if (*recognize) return cmd_recognize(session, input, oracle, false);
    if (*reconstruct) return cmd_recognize(session, input, oracle, true);
    if (*persistence) return cmd_check_persistence(session, input);
    if (*gen) return cmd_gen(session, gen_kind, gen_cfg, dense);
    if (*render) return cmd_render(session, input, kind, render_flags);
  } catch (const Error& e) {
    return session.report_error(e);
  }
  return kInputError;
}

}  // namespace fanvis::cli
