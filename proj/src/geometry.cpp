#include "opath/geometry.hpp"

#include <cmath>

#include "opath/errors.hpp"

namespace opath {

bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

bool is_valid_route(const Route& route, int n_collectibles) {
  if (static_cast<int>(route.order.size()) != n_collectibles) return false;
  std::vector<char> seen(static_cast<std::size_t>(n_collectibles), 0);
  for (int idx : route.order) {
    if (idx < 0 || idx >= n_collectibles || seen[static_cast<std::size_t>(idx)]) return false;
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  return true;
}

double path_length(const Instance& instance, const Route& route) {
  const int n = instance.size();
  if (!is_valid_route(route, n)) {
    throw InvalidRouteError("route is not a permutation of 0.." + std::to_string(n - 1) +
                            " (size " + std::to_string(route.order.size()) + ")");
  }
  if (n == 0) return 0.0;
  double total = dist(instance.start, instance.collectibles[static_cast<std::size_t>(route.order[0])]);
  for (int k = 1; k < n; ++k) {
    total += dist(instance.collectibles[static_cast<std::size_t>(route.order[k - 1])],
                  instance.collectibles[static_cast<std::size_t>(route.order[k])]);
  }
  return total;
}

}  // namespace opath
