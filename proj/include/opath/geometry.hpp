#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opath {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

bool is_finite(const Point& p);

/// A start position plus the collectibles to visit. Routes refer to
/// collectibles by index into this list; indices are stable.
struct Instance {
  Point start;
  std::vector<Point> collectibles;

  int size() const noexcept { return static_cast<int>(collectibles.size()); }
};

/// Visit order over collectible indices. A valid route is a permutation
/// of 0..N-1.
struct Route {
  std::vector<int> order;
};

struct SolveResult {
  Route route;
  double total_length = 0.0;
  std::string solver_name;
  std::uint64_t n_evaluated = 0;  // candidate extensions / DP transitions examined
};

/// Euclidean distance between two positions.
double dist(const Point& a, const Point& b);

bool is_valid_route(const Route& route, int n_collectibles);

/// Open-path length: start -> order[0] -> ... -> order[N-1]. No return leg.
/// Returns 0 for an empty instance. Throws InvalidRouteError if `order` is
/// not a permutation of 0..N-1.
double path_length(const Instance& instance, const Route& route);

}  // namespace opath
