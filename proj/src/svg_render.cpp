#include "opath/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opath/numfmt.hpp"

namespace opath {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"};
constexpr const char* kStartColor = "#d62728";

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_routes_svg(const Instance& instance, const std::vector<LabeledRoute>& routes,
                              const std::vector<RouteStyle>& styles) {
  if (routes.size() > kMaxRoutesPerCanvas) {
    throw std::invalid_argument("render_routes_svg: at most 4 routes per canvas");
  }
  std::vector<double> totals;
  totals.reserve(routes.size());
  for (const LabeledRoute& lr : routes) totals.push_back(path_length(instance, lr.route));

  double min_x = instance.start.x, max_x = instance.start.x;
  double min_y = instance.start.y, max_y = instance.start.y;
  for (const Point& p : instance.collectibles) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span_x = max_x - min_x;
  const double span_y = max_y - min_y;
  const double extent = std::max({span_x, span_y, 1.0});
  const double margin = 0.05 * extent;
  const double view_w = span_x + 2.0 * margin;
  const double view_h = span_y + 2.0 * margin;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + g9(min_x - margin) + " " +
         g9(min_y - margin) + " " + g9(view_w) + " " + g9(view_h) + "\" width=\"720\" height=\"" +
         g9(720.0 * view_h / view_w) + "\">\n";
  svg += "  <rect x=\"" + g9(min_x - margin) + "\" y=\"" + g9(min_y - margin) + "\" width=\"" +
         g9(view_w) + "\" height=\"" + g9(view_h) + "\" fill=\"#ffffff\"/>\n";

  const double stroke = 0.005 * extent;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    const RouteStyle* style = r < styles.size() ? &styles[r] : nullptr;
    const std::string color =
        style && !style->color.empty() ? style->color : kPalette[r % std::size(kPalette)];
    std::string points = g9(instance.start.x) + "," + g9(instance.start.y);
    for (int idx : routes[r].route.order) {
      const Point& p = instance.collectibles[static_cast<std::size_t>(idx)];
      points += " " + g9(p.x) + "," + g9(p.y);
    }
    svg += "  <polyline class=\"route\" data-label=\"" + escape_xml(routes[r].label) +
           "\" points=\"" + points + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           g9(stroke);
    if (style && !style->dasharray.empty()) {
      svg += "\" stroke-dasharray=\"" + escape_xml(style->dasharray);
    }
    svg += "\"/>\n";
  }

  const double dot = 0.012 * extent;
  for (const Point& p : instance.collectibles) {
    svg += "  <circle class=\"collectible\" cx=\"" + g9(p.x) + "\" cy=\"" + g9(p.y) + "\" r=\"" +
           g9(dot) + "\" fill=\"#333333\"/>\n";
  }
  svg += "  <circle class=\"start\" cx=\"" + g9(instance.start.x) + "\" cy=\"" +
         g9(instance.start.y) + "\" r=\"" + g9(0.02 * extent) + "\" fill=\"" + kStartColor +
         "\"/>\n";

  const double font = 0.035 * extent;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    const RouteStyle* style = r < styles.size() ? &styles[r] : nullptr;
    const std::string color =
        style && !style->color.empty() ? style->color : kPalette[r % std::size(kPalette)];
    const double tx = min_x - margin + 0.02 * extent;
    const double ty = min_y - margin + (static_cast<double>(r) + 1.0) * 0.045 * extent;
    svg += "  <text class=\"legend\" x=\"" + g9(tx) + "\" y=\"" + g9(ty) + "\" font-size=\"" +
           g9(font) + "\" fill=\"" + color + "\">" + escape_xml(routes[r].label) + ": " +
           std::to_string(std::llround(totals[r])) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace opath
