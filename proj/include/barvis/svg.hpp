#ifndef BARVIS_SVG_HPP
#define BARVIS_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "barvis/bar_layout.hpp"
#include "barvis/quasi_planar.hpp"

namespace barvis {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

/// Maps a data box onto a fixed canvas with y pointing up.
struct Viewport {
  double x0 = 0, y0 = 0, sx = 1, sy = 1;
  static constexpr double width = 800, height = 600, margin = 40;

  Viewport(double xmin, double xmax, double ymin, double ymax) : x0(xmin), y0(ymin) {
    sx = (width - 2 * margin) / std::max(xmax - xmin, 1e-9);
    sy = (height - 2 * margin) / std::max(ymax - ymin, 1e-9);
    if (xmax <= xmin) sx = 1;
    if (ymax <= ymin) sy = 1;
  }
  double px(double x) const { return margin + (x - x0) * sx; }
  double py(double y) const { return height - margin - (y - y0) * sy; }

  std::string open(const std::string& kind, std::size_t count) const {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
                    "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    s += "<metadata>{\"kind\":\"" + kind + "\",\"count\":" + std::to_string(count) + ",\"origin\":[" + num(x0) + "," +
         num(y0) + "],\"scale\":[" + num(sx) + "," + num(sy) + "],\"margin\":" + num(margin) + "}</metadata>\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return s;
  }
};

template <class Xs, class Ys>
Viewport fit(const Xs& xs, const Ys& ys) {
  if (xs.empty()) return Viewport(0, 1, 0, 1);
  auto [xlo, xhi] = std::minmax_element(xs.begin(), xs.end());
  auto [ylo, yhi] = std::minmax_element(ys.begin(), ys.end());
  return Viewport(*xlo, *xhi, *ylo, *yhi);
}

}  // namespace detail

/// Bars as horizontal strokes labelled by vertex id.
inline std::string render_svg(const BarLayout& layout) {
  std::vector<double> xs, ys;
  for (const Bar& b : layout.bars()) {
    xs.push_back(b.x_left.to_double());
    xs.push_back(b.x_right.to_double());
    ys.push_back(b.y.to_double());
  }
  const detail::Viewport vp = detail::fit(xs, ys);
  std::string s = vp.open("layout", layout.size());
  for (const Bar& b : layout.bars()) {
    const double y = vp.py(b.y.to_double());
    const double x1 = vp.px(b.x_left.to_double()), x2 = vp.px(b.x_right.to_double());
    s += "<line class=\"bar\" data-id=\"" + std::to_string(b.id) + "\" x1=\"" + detail::num(x1) + "\" y1=\"" +
         detail::num(y) + "\" x2=\"" + detail::num(x2) + "\" y2=\"" + detail::num(y) +
         "\" stroke=\"black\" stroke-width=\"4\"/>\n";
    s += "<text x=\"" + detail::num(x1) + "\" y=\"" + detail::num(y - 6) + "\" font-size=\"12\">" + std::to_string(b.id) +
         "</text>\n";
  }
  return s + "</svg>\n";
}

/// Vertices as dots, edges as polylines in their blue or red color.
inline std::string render_svg(const PolylineDrawing& d) {
  std::vector<double> xs, ys;
  for (const Point& p : d.vertex_points) {
    xs.push_back(p.x.to_double());
    ys.push_back(p.y.to_double());
  }
  for (const DrawnEdge& e : d.edges)
    for (const Point& p : e.polyline) {
      xs.push_back(p.x.to_double());
      ys.push_back(p.y.to_double());
    }
  const detail::Viewport vp = detail::fit(xs, ys);
  std::string s = vp.open("drawing", d.edges.size());
  for (const DrawnEdge& e : d.edges) {
    s += "<polyline class=\"edge\" data-edge=\"" + std::to_string(e.edge.u) + "-" + std::to_string(e.edge.v) +
         "\" fill=\"none\" stroke=\"" + to_string(e.color) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < e.polyline.size(); ++i) {
      if (i) s += ' ';
      s += detail::num(vp.px(e.polyline[i].x.to_double())) + "," + detail::num(vp.py(e.polyline[i].y.to_double()));
    }
    s += "\"/>\n";
  }
  for (std::size_t v = 0; v < d.vertex_points.size(); ++v) {
    const double x = vp.px(d.vertex_points[v].x.to_double()), y = vp.py(d.vertex_points[v].y.to_double());
    s += "<circle cx=\"" + detail::num(x) + "\" cy=\"" + detail::num(y) + "\" r=\"3\" fill=\"black\"/>\n";
    s += "<text x=\"" + detail::num(x + 4) + "\" y=\"" + detail::num(y - 4) + "\" font-size=\"12\">" + std::to_string(v) +
         "</text>\n";
  }
  return s + "</svg>\n";
}

}  // namespace barvis

#endif  // BARVIS_SVG_HPP
