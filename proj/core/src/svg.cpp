#include "racforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "racforge/checker.hpp"
#include "racforge/errors.hpp"

namespace racforge {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

const char* kPalette[] = {"#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#17becf", "#bcbd22", "#e377c2", "#8c564b"};

struct FlatPoint {
  double x, y;
};

struct CrossMark {
  FlatPoint at;
  FlatPoint u;  // unit directions of the two edges
  FlatPoint v;
};

std::string render(const Graph& graph, const std::map<VertexId, FlatPoint>& pos,
                   const std::vector<CrossMark>& marks, const SvgOptions& opts,
                   const RoleMap& roles) {
  if (opts.scale <= 0) throw InvalidParameter("svg scale must be positive");
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& [v, p] : pos) {
    (void)v;
    if (first) {
      xmin = xmax = p.x;
      ymin = ymax = p.y;
      first = false;
    } else {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double margin = 2.0;
  const double s = opts.scale;
  auto px = [&](const FlatPoint& p) { return (p.x - xmin + margin) * s; };
  auto py = [&](const FlatPoint& p) { return (ymax - p.y + margin) * s; };  // y up
  const double width = (xmax - xmin + 2 * margin) * s;
  const double height = (ymax - ymin + 2 * margin) * s;

  std::map<VertexId, std::string> color;
  std::size_t palette_idx = 0;
  for (const auto& role : opts.highlight_roles) {
    auto it = roles.find(role);
    if (it == roles.end()) continue;
    const char* c = kPalette[palette_idx % (sizeof(kPalette) / sizeof(kPalette[0]))];
    ++palette_idx;
    for (const auto& v : it->second) color[v] = c;
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"#333333\" stroke-width=\"" << num(opts.edge_stroke_width)
      << "\" stroke-linecap=\"round\">\n";
  for (const auto& e : graph.edges()) {
    const FlatPoint& a = pos.at(e.u);
    const FlatPoint& b = pos.at(e.v);
    out << "<line x1=\"" << num(px(a)) << "\" y1=\"" << num(py(a)) << "\" x2=\"" << num(px(b))
        << "\" y2=\"" << num(py(b)) << "\"/>\n";
  }
  out << "</g>\n";
  if (opts.show_crossings && !marks.empty()) {
    const double g = 0.35 * s;
    out << "<g class=\"rag\" stroke=\"#d62728\" fill=\"none\" stroke-width=\""
        << num(opts.marker_stroke_width) << "\">\n";
    for (const auto& m : marks) {
      // Corner glyph spanning the two crossing directions.
      const double cx = px(m.at), cy = py(m.at);
      const double ux = m.u.x * g, uy = -m.u.y * g;
      const double vx = m.v.x * g, vy = -m.v.y * g;
      out << "<path class=\"rag\" d=\"M " << num(cx + ux) << " " << num(cy + uy) << " L "
          << num(cx + ux + vx) << " " << num(cy + uy + vy) << " L " << num(cx + vx) << " "
          << num(cy + vy) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g stroke=\"#333333\" stroke-width=\"1\">\n";
  for (const auto& v : graph.vertices()) {
    const FlatPoint& p = pos.at(v);
    auto it = color.find(v);
    const std::string fill = it == color.end() ? "#f0f0f0" : it->second;
    out << "<circle cx=\"" << num(px(p)) << "\" cy=\"" << num(py(p)) << "\" r=\""
        << num(0.18 * s) << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

FlatPoint unit_dir(const FlatPoint& a, const FlatPoint& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double n = std::hypot(dx, dy);
  return {dx / n, dy / n};
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOptions& opts, const RoleMap& roles) {
  std::map<VertexId, FlatPoint> pos;
  for (const auto& v : d.graph.vertices()) {
    const Point& p = d.at(v);
    pos[v] = {p.x.to_double(), p.y.to_double()};
  }
  std::vector<CrossMark> marks;
  if (opts.show_crossings) {
    const RacReport report = check_rac(d);
    for (const auto& c : report.crossings) {
      if (!c.perpendicular) continue;
      CrossMark m;
      m.at = {c.point.x.to_double(), c.point.y.to_double()};
      m.u = unit_dir(pos.at(c.e1.u), pos.at(c.e1.v));
      m.v = unit_dir(pos.at(c.e2.u), pos.at(c.e2.v));
      marks.push_back(m);
    }
  }
  return render(d.graph, pos, marks, opts, roles);
}

std::string render_svg(const FloatDrawing& d, const SvgOptions& opts, const RoleMap& roles) {
  std::map<VertexId, FlatPoint> pos;
  for (const auto& [v, p] : d.positions) pos[v] = {p[0], p[1]};
  std::vector<CrossMark> marks;
  if (opts.show_crossings) {
    for (const auto& [e1, e2] : float_crossings(d)) {
      const FlatPoint u = unit_dir(pos.at(e1.u), pos.at(e1.v));
      const FlatPoint v = unit_dir(pos.at(e2.u), pos.at(e2.v));
      if (std::abs(u.x * v.x + u.y * v.y) > 1e-9) continue;  // glyphs mark right angles only
      // Intersection point in doubles.
      const FlatPoint a = pos.at(e1.u), b = pos.at(e1.v);
      const FlatPoint c = pos.at(e2.u), dd = pos.at(e2.v);
      const double den = (b.x - a.x) * (dd.y - c.y) - (b.y - a.y) * (dd.x - c.x);
      if (den == 0) continue;
      const double t =
          ((c.x - a.x) * (dd.y - c.y) - (c.y - a.y) * (dd.x - c.x)) / den;
      CrossMark m;
      m.at = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      m.u = u;
      m.v = v;
      marks.push_back(m);
    }
  }
  return render(d.graph, pos, marks, opts, roles);
}

}  // namespace racforge
