#include "opath/solvers.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "opath/errors.hpp"

namespace opath {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ExhaustiveSearch {
  const Instance& instance;
  bool prune;
  int n;
  std::vector<char> visited;
  std::vector<int> current;
  std::vector<int> best_order;
  double best_length = kInf;
  std::uint64_t examined = 0;

  explicit ExhaustiveSearch(const Instance& inst, bool prune_enabled)
      : instance(inst),
        prune(prune_enabled),
        n(inst.size()),
        visited(static_cast<std::size_t>(inst.size()), 0) {
    current.reserve(static_cast<std::size_t>(n));
  }

  void expand(const Point& at, double length) {
    if (static_cast<int>(current.size()) == n) {
      // Strict improvement keeps the first (lexicographically smallest)
      // optimum found by the ascending-index DFS.
      if (length < best_length) {
        best_length = length;
        best_order = current;
      }
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (visited[static_cast<std::size_t>(c)]) continue;
      ++examined;
      const Point& next = instance.collectibles[static_cast<std::size_t>(c)];
      const double extended = length + dist(at, next);
      if (prune && extended >= best_length) continue;
      visited[static_cast<std::size_t>(c)] = 1;
      current.push_back(c);
      expand(next, extended);
      current.pop_back();
      visited[static_cast<std::size_t>(c)] = 0;
    }
  }
};

}  // namespace

SolveResult greedy(const Instance& instance) {
  const int n = instance.size();
  Route route;
  route.order.reserve(static_cast<std::size_t>(n));
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  Point current = instance.start;
  std::uint64_t evaluated = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    double best_dist = kInf;
    for (int c = 0; c < n; ++c) {
      if (visited[static_cast<std::size_t>(c)]) continue;
      ++evaluated;
      const double d = dist(current, instance.collectibles[static_cast<std::size_t>(c)]);
      if (d < best_dist) {
        best_dist = d;
        best = c;
      }
    }
    visited[static_cast<std::size_t>(best)] = 1;
    route.order.push_back(best);
    current = instance.collectibles[static_cast<std::size_t>(best)];
  }
  return {route, path_length(instance, route), "greedy", evaluated};
}

SolveResult greedy_with_error(const Instance& instance, double sigma, RandomStream& rng) {
  if (sigma < 0.0) throw ConfigError("greedy_with_error: sigma must be >= 0");
  const TruncNormalParams noise{1.0, sigma, 0.7, 1.3};
  const int n = instance.size();
  Route route;
  route.order.reserve(static_cast<std::size_t>(n));
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  Point current = instance.start;
  std::uint64_t evaluated = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    double best_perceived = kInf;
    for (int c = 0; c < n; ++c) {
      if (visited[static_cast<std::size_t>(c)]) continue;
      ++evaluated;
      const double zeta = sample_trunc_normal(noise, rng);
      const double perceived =
          dist(current, instance.collectibles[static_cast<std::size_t>(c)]) * zeta;
      if (perceived < best_perceived) {
        best_perceived = perceived;
        best = c;
      }
    }
    visited[static_cast<std::size_t>(best)] = 1;
    route.order.push_back(best);
    current = instance.collectibles[static_cast<std::size_t>(best)];
  }
  return {route, path_length(instance, route), "greedy-error", evaluated};
}

SolveResult exact_exhaustive(const Instance& instance, int limit, bool prune) {
  const int n = instance.size();
  if (n > limit) {
    throw SizeExceededError("exact_exhaustive: " + std::to_string(n) +
                                " collectibles exceeds the limit of " + std::to_string(limit),
                            n, limit);
  }
  if (n == 0) return {Route{}, 0.0, "exhaustive", 0};
  ExhaustiveSearch search(instance, prune);
  search.expand(instance.start, 0.0);
  Route route{std::move(search.best_order)};
  return {route, path_length(instance, route), "exhaustive", search.examined};
}

SolveResult exact_held_karp(const Instance& instance) {
  const int n = instance.size();
  if (n > kHeldKarpLimit) {
    throw SizeExceededError("exact_held_karp: " + std::to_string(n) +
                                " collectibles exceeds the limit of " +
                                std::to_string(kHeldKarpLimit),
                            n, kHeldKarpLimit);
  }
  if (n == 0) return {Route{}, 0.0, "held-karp", 0};

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<double> from_start(un);
  std::vector<double> between(un * un);
  for (std::size_t j = 0; j < un; ++j) {
    from_start[j] = dist(instance.start, instance.collectibles[j]);
    for (std::size_t i = 0; i < un; ++i) {
      between[i * un + j] = dist(instance.collectibles[i], instance.collectibles[j]);
    }
  }

  // value[mask * n + j]: length of the best open path from start that covers
  // exactly the collectibles in mask and ends at j.
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<double> value((static_cast<std::size_t>(full) + 1) * un, kInf);
  std::uint64_t transitions = 0;
  for (std::size_t j = 0; j < un; ++j) {
    value[(std::size_t{1} << j) * un + j] = from_start[j];
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // single-bit bases already set
    for (std::uint32_t ends = mask; ends != 0; ends &= ends - 1) {
      const int j = std::countr_zero(ends);
      const std::uint32_t prev = mask ^ (1u << j);
      double best = kInf;
      for (std::uint32_t mids = prev; mids != 0; mids &= mids - 1) {
        const int i = std::countr_zero(mids);
        const double extended = value[static_cast<std::size_t>(prev) * un +
                                      static_cast<std::size_t>(i)] +
                                between[static_cast<std::size_t>(i) * un +
                                        static_cast<std::size_t>(j)];
        ++transitions;
        if (extended < best) best = extended;
      }
      value[static_cast<std::size_t>(mask) * un + static_cast<std::size_t>(j)] = best;
    }
  }

  int end = -1;
  double best_total = kInf;
  for (int j = 0; j < n; ++j) {
    const double total = value[static_cast<std::size_t>(full) * un + static_cast<std::size_t>(j)];
    if (total < best_total) {
      best_total = total;
      end = j;
    }
  }

  // Backtrack by recomputation: the forward pass kept the first minimal
  // predecessor in ascending order, so the first exact match rediscovers it.
  std::vector<int> reversed;
  reversed.reserve(un);
  std::uint32_t mask = full;
  int j = end;
  while (std::popcount(mask) > 1) {
    reversed.push_back(j);
    const std::uint32_t prev = mask ^ (1u << j);
    const double target = value[static_cast<std::size_t>(mask) * un + static_cast<std::size_t>(j)];
    int pick = -1;
    for (std::uint32_t mids = prev; mids != 0; mids &= mids - 1) {
      const int i = std::countr_zero(mids);
      const double extended =
          value[static_cast<std::size_t>(prev) * un + static_cast<std::size_t>(i)] +
          between[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)];
      if (extended == target) {
        pick = i;
        break;
      }
    }
    mask = prev;
    j = pick;
  }
  reversed.push_back(j);

  Route route;
  route.order.assign(reversed.rbegin(), reversed.rend());
  return {route, path_length(instance, route), "held-karp", transitions};
}

}  // namespace opath
