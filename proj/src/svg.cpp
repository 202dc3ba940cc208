#include "fanvis/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace fanvis::svg {
namespace {

struct DPoint {
  double x, y;
};

std::string fixed(double v, int precision) {
  if (v == 0.0) v = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

// Maps data coordinates (y up) into a canvas with a margin (y down).
class Frame {
 public:
  Frame(const std::vector<DPoint>& pts, const RenderOptions& opt) : opt_(opt) {
    min_x_ = max_x_ = pts.empty() ? 0.0 : pts.front().x;
    min_y_ = max_y_ = pts.empty() ? 0.0 : pts.front().y;
    for (const DPoint& p : pts) {
      min_x_ = std::min(min_x_, p.x);
      max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y);
      max_y_ = std::max(max_y_, p.y);
    }
    const double extent = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-9});
    scale_ = opt.canvas / extent;
    width_ = (max_x_ - min_x_) * scale_ + 2 * kMargin;
    height_ = (max_y_ - min_y_) * scale_ + 2 * kMargin;
  }

  std::string x(double v) const { return fixed((v - min_x_) * scale_ + kMargin, opt_.precision); }
  std::string y(double v) const { return fixed((max_y_ - v) * scale_ + kMargin, opt_.precision); }
  std::string pt(const DPoint& p) const { return x(p.x) + "," + y(p.y); }
  double min_x() const { return min_x_; }
  double max_x() const { return max_x_; }

  std::string header() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width_, opt_.precision)
        << "\" height=\"" << fixed(height_, opt_.precision) << "\" viewBox=\"0 0 "
        << fixed(width_, opt_.precision) << " " << fixed(height_, opt_.precision) << "\">\n";
    return out.str();
  }

 private:
  static constexpr double kMargin = 20.0;
  const RenderOptions& opt_;
  double min_x_, max_x_, min_y_, max_y_;
  double scale_ = 1.0, width_ = 0.0, height_ = 0.0;
};

DPoint to_display(const Point2& p) { return {p.x.get_d(), p.y.get_d()}; }

void draw_visibility(std::ostream& out, const Frame& frame, const VisibilityGraph& g,
                     const std::vector<DPoint>& pts) {
  out << "  <g class=\"visibility\" stroke=\"#1f77b4\" stroke-width=\"1\" "
         "stroke-dasharray=\"4,3\">\n";
  for (const auto& [i, j] : g.edges()) {
    out << "    <line x1=\"" << frame.x(pts[i].x) << "\" y1=\"" << frame.y(pts[i].y)
        << "\" x2=\"" << frame.x(pts[j].x) << "\" y2=\"" << frame.y(pts[j].y) << "\"/>\n";
  }
  out << "  </g>\n";
}

void draw_vertices(std::ostream& out, const Frame& frame, const std::vector<DPoint>& pts,
                   std::optional<std::size_t> kernel) {
  out << "  <g class=\"vertices\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool is_kernel = kernel && *kernel == i;
    out << "    <circle" << (is_kernel ? " class=\"kernel\"" : "") << " cx=\""
        << frame.x(pts[i].x) << "\" cy=\"" << frame.y(pts[i].y) << "\" r=\""
        << (is_kernel ? "5" : "3") << "\" fill=\"" << (is_kernel ? "#d62728" : "black")
        << "\"/>\n";
  }
  out << "  </g>\n";
}

void draw_horizontal(std::ostream& out, const Frame& frame, double y_value) {
  out << "  <line class=\"vanishing-line\" x1=\"" << frame.x(frame.min_x()) << "\" y1=\""
      << frame.y(y_value) << "\" x2=\"" << frame.x(frame.max_x()) << "\" y2=\""
      << frame.y(y_value) << "\" stroke=\"#ff7f0e\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string render_polygon(const Polygon& polygon, std::optional<std::size_t> kernel,
                           const RenderOptions& options) {
  if (options.show_vanishing && kernel) {
    return render_fan(validate_convex_fan(polygon, *kernel), options);
  }
  std::vector<DPoint> pts;
  for (const Point2& v : polygon.vertices()) pts.push_back(to_display(v));
  const Frame frame(pts, options);

  std::ostringstream out;
  out << frame.header();
  out << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << frame.pt(pts[i]);
  out << "\"/>\n";
  if (options.show_visibility) {
    draw_visibility(out, frame, visibility_graph_of_polygon(polygon), pts);
  }
  draw_vertices(out, frame, pts, kernel);
  out << "</svg>\n";
  return out.str();
}

std::string render_fan(const ConvexFan& fan, const RenderOptions& options) {
  if (!options.show_vanishing) return render_polygon(fan.polygon(), fan.kernel_index(), options);

  const std::vector<GammaPoint> placed = canonicalize_fan(options.projection, fan);
  std::vector<DPoint> pts;
  for (const GammaPoint& g : placed) pts.push_back({g.y.get_d(), g.z.get_d()});
  const Frame frame(pts, options);

  std::ostringstream out;
  out << frame.header();
  out << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << frame.pt(pts[i]);
  out << "\"/>\n";
  if (options.show_visibility) {
    draw_visibility(out, frame, visibility_graph_of_polygon(fan.polygon()), pts);
  }
  draw_horizontal(out, frame, options.projection.pz().get_d());
  draw_vertices(out, frame, pts, fan.kernel_index());
  out << "</svg>\n";
  return out.str();
}

std::string render_terrain(const Terrain& terrain, const RenderOptions& options) {
  std::vector<DPoint> pts;
  for (const Point2& v : terrain.vertices()) pts.push_back(to_display(v));
  std::vector<DPoint> extent = pts;
  double vanishing = 0.0;
  if (options.show_vanishing) {
    // terrain_to_fan lifts heights by c; the vanishing line x = px sits at
    // height px - c in terrain coordinates.
    vanishing = Scalar(options.projection.px() - terrain_lift(options.projection, terrain)).get_d();
    extent.push_back({pts.front().x, vanishing});
  }
  const Frame frame(extent, options);

  std::ostringstream out;
  out << frame.header();
  out << "  <polyline class=\"terrain\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << frame.pt(pts[i]);
  out << "\"/>\n";
  if (options.show_visibility) {
    draw_visibility(out, frame, visibility_graph_of_terrain(terrain), pts);
  }
  if (options.show_vanishing) draw_horizontal(out, frame, vanishing);
  draw_vertices(out, frame, pts, std::nullopt);
  out << "</svg>\n";
  return out.str();
}

std::string render_graph(const OrderedGraph& graph, const RenderOptions& options) {
  std::vector<DPoint> pts;
  const std::size_t n = graph.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(i) /
                                                    static_cast<double>(std::max<std::size_t>(n, 1));
    pts.push_back({std::cos(angle), std::sin(angle)});
  }
  const Frame frame(pts, options);

  std::ostringstream out;
  out << frame.header();
  out << "  <g class=\"edges\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& [i, j] : graph.edges()) {
    out << "    <line x1=\"" << frame.x(pts[i].x) << "\" y1=\"" << frame.y(pts[i].y)
        << "\" x2=\"" << frame.x(pts[j].x) << "\" y2=\"" << frame.y(pts[j].y) << "\"/>\n";
  }
  out << "  </g>\n";
  draw_vertices(out, frame, pts, std::nullopt);
  out << "  <g class=\"labels\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    <text x=\"" << frame.x(pts[i].x * 1.08) << "\" y=\"" << frame.y(pts[i].y * 1.08)
        << "\">" << i << "</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace fanvis::svg
