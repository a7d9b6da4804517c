#pragma once

#include <string>
#include <vector>

#include "opath/geometry.hpp"

namespace opath {

inline constexpr std::size_t kMaxRoutesPerCanvas = 4;

struct RouteStyle {
  std::string color;       // CSS color; empty picks from the default palette
  std::string dasharray;   // e.g. "4 2"; empty draws solid
};

struct LabeledRoute {
  std::string label;
  Route route;
};

/// Standalone SVG of an instance and up to four routes: start as a distinct
/// red circle, collectibles as dot markers, each route as a polyline in
/// visit order (start leg included), and a legend of "label: total" with
/// totals rounded to the nearest map unit. The viewBox covers all points
/// plus a 5% margin. Output is byte-deterministic. Throws InvalidRouteError
/// for routes that are not permutations and std::invalid_argument for more
/// than kMaxRoutesPerCanvas routes.
std::string render_routes_svg(const Instance& instance, const std::vector<LabeledRoute>& routes,
                              const std::vector<RouteStyle>& styles = {});

}  // namespace opath
