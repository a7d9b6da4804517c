#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "opath/errors.hpp"
#include "opath/solvers.hpp"
#include "test_support.hpp"

using namespace opath;
using opath_test::rel_close;

namespace {

// The worked three-collectible instance used throughout: greedy walks right
// first (total 5.5) while the optimum sweeps left first (total 5.0).
const Instance kWorked{{0, 0}, {{1, 0}, {2, 0}, {-1.5, 0}}};

}  // namespace

TEST_CASE("greedy: nearest neighbor with lowest-index tie-break") {
  const SolveResult worked = greedy(kWorked);
  CHECK(worked.route.order == std::vector<int>{0, 1, 2});
  CHECK(worked.total_length == 5.5);

  const SolveResult single = greedy(Instance{{0, 0}, {{3, 4}}});
  CHECK(single.route.order == std::vector<int>{0});
  CHECK(single.total_length == 5.0);

  // Equidistant candidates: the lower index wins.
  const SolveResult tie = greedy(Instance{{0, 0}, {{1, 0}, {-1, 0}}});
  CHECK(tie.route.order == std::vector<int>{0, 1});
  CHECK(tie.total_length == 3.0);

  CHECK(greedy(Instance{{0, 0}, {}}).route.order.empty());
}

TEST_CASE("greedy: route is always a permutation and length matches recompute") {
  RandomStream rng(301, 0);
  for (int n : {0, 1, 2, 7, 40}) {
    const Instance instance = opath_test::random_instance(rng, n);
    const SolveResult result = greedy(instance);
    CHECK(is_valid_route(result.route, n));
    CHECK(rel_close(result.total_length, path_length(instance, result.route)));
  }
}

TEST_CASE("exact_exhaustive: matches the enumeration oracle on the worked instance") {
  const auto oracle = opath_test::reference_optimal(kWorked);
  CHECK(oracle.route.order == std::vector<int>{2, 0, 1});
  CHECK(oracle.total == 5.0);

  const SolveResult result = exact_exhaustive(kWorked);
  CHECK(result.route.order == oracle.route.order);
  CHECK(result.total_length == oracle.total);
}

TEST_CASE("exact_exhaustive: edge cases") {
  const SolveResult empty = exact_exhaustive(Instance{{0, 0}, {}});
  CHECK(empty.route.order.empty());
  CHECK(empty.total_length == 0.0);

  // Duplicate points tie; lexicographically smallest order wins.
  const SolveResult dup = exact_exhaustive(Instance{{0, 0}, {{3, 4}, {3, 4}}});
  CHECK(dup.route.order == std::vector<int>{0, 1});
  CHECK(dup.total_length == 5.0);

  RandomStream rng(302, 0);
  const Instance big = opath_test::random_instance(rng, 11);
  CHECK_THROWS_AS(exact_exhaustive(big), SizeExceededError);
  CHECK_NOTHROW(exact_exhaustive(big, 11));
}

TEST_CASE("exact_exhaustive: pruning never changes the result") {
  RandomStream rng(303, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);  // 2..8
    const Instance instance = opath_test::random_instance(rng, n);
    const SolveResult pruned = exact_exhaustive(instance, kExhaustiveDefaultLimit, true);
    const SolveResult unpruned = exact_exhaustive(instance, kExhaustiveDefaultLimit, false);
    CHECK(pruned.route.order == unpruned.route.order);
    CHECK(pruned.total_length == unpruned.total_length);
    CHECK(pruned.n_evaluated <= unpruned.n_evaluated);
  }
}

TEST_CASE("exact_exhaustive: agrees with the enumeration oracle on random instances") {
  RandomStream rng(304, 0);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 7);  // 1..7
    const Instance instance = opath_test::random_instance(rng, n);
    const auto oracle = opath_test::reference_optimal(instance);
    const SolveResult result = exact_exhaustive(instance);
    CHECK(result.route.order == oracle.route.order);
    CHECK(rel_close(result.total_length, oracle.total));
  }
}

TEST_CASE("exact_held_karp: worked instance and edge cases") {
  const SolveResult worked = exact_held_karp(kWorked);
  CHECK(worked.total_length == 5.0);
  CHECK(worked.route.order == std::vector<int>{2, 0, 1});

  CHECK(exact_held_karp(Instance{{0, 0}, {{3, 4}}}).total_length == 5.0);
  CHECK(exact_held_karp(Instance{{0, 0}, {}}).total_length == 0.0);

  Instance too_big{{0, 0}, {}};
  too_big.collectibles.assign(25, Point{1.0, 1.0});
  CHECK_THROWS_AS(exact_held_karp(too_big), SizeExceededError);
}

TEST_CASE("exact_held_karp: equals exhaustive length on 200 random instances") {
  RandomStream rng(305, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 9);  // 2..10
    const Instance instance = opath_test::random_instance(rng, n);
    const SolveResult dp = exact_held_karp(instance);
    const SolveResult brute = exact_exhaustive(instance);
    CHECK(rel_close(dp.total_length, brute.total_length));
    CHECK(is_valid_route(dp.route, n));
    CHECK(rel_close(dp.total_length, path_length(instance, dp.route)));
  }
}

TEST_CASE("dominance: exact <= greedy, strictly better somewhere") {
  RandomStream rng(306, 0);
  bool strict = false;
  for (int rep = 0; rep < 400; ++rep) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 10);
    const Instance instance = opath_test::random_instance(rng, n);
    const double g = greedy(instance).total_length;
    const double opt = exact_held_karp(instance).total_length;
    CHECK(opt <= g);
    if (opt < g) strict = true;
  }
  CHECK(strict);
}

TEST_CASE("greedy_with_error: sigma=0 reproduces greedy exactly") {
  RandomStream rng(307, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = static_cast<int>(rng.next_u64() % 12);
    const Instance instance = opath_test::random_instance(rng, n);
    RandomStream noise(99, static_cast<std::uint64_t>(rep));
    const SolveResult noisy = greedy_with_error(instance, 0.0, noise);
    const SolveResult plain = greedy(instance);
    CHECK(noisy.route.order == plain.route.order);
    CHECK(noisy.total_length == plain.total_length);
  }
}

TEST_CASE("greedy_with_error: single candidate is immune to noise") {
  RandomStream rng(308, 0);
  const SolveResult result = greedy_with_error(Instance{{0, 0}, {{3, 4}}}, 0.4, rng);
  CHECK(result.route.order == std::vector<int>{0});
  CHECK(result.total_length == 5.0);
}

TEST_CASE("greedy_with_error: negative sigma rejected") {
  RandomStream rng(309, 0);
  CHECK_THROWS_AS(greedy_with_error(kWorked, -0.1, rng), ConfigError);
}

TEST_CASE("greedy_with_error: matches the decision-model oracle on the worked instance") {
  // On kWorked with sigma=0.4 the route space collapses to three outcomes.
  // Perceived first step: argmin(1*z0, 2*z1, 1.5*z2). Candidate 1 can never
  // win (2*0.7 = 1.4 > 1.3 >= z0), so the first pick flips to collectible 2
  // iff 1.5*z2 < z0, which also implies it beats candidate 1. After a flip,
  // from (-1.5,0) the next pick is candidate 1 iff 3.5*z1' < 2.5*z0'.
  // Totals: no flip -> 5.5 ([0,1,2]); flip then 0 -> 5.0 ([2,0,1]);
  // flip then 1 -> 6.0 ([2,1,0]).
  const double sigma = 0.4;
  const TruncNormalParams params{1.0, sigma, 0.7, 1.3};

  RandomStream oracle_rng(987654321, 0);
  const int oracle_draws = 400000;
  long long oracle_flips = 0;
  double oracle_sum = 0.0;
  for (int i = 0; i < oracle_draws; ++i) {
    const double z0 = sample_trunc_normal(params, oracle_rng);
    const double z2 = sample_trunc_normal(params, oracle_rng);
    if (1.5 * z2 < z0) {
      ++oracle_flips;
      const double z0b = sample_trunc_normal(params, oracle_rng);
      const double z1b = sample_trunc_normal(params, oracle_rng);
      oracle_sum += (3.5 * z1b < 2.5 * z0b) ? 6.0 : 5.0;
    } else {
      oracle_sum += 5.5;
    }
  }
  const double oracle_flip_rate = static_cast<double>(oracle_flips) / oracle_draws;
  const double oracle_mean = oracle_sum / oracle_draws;

  const int solver_runs = 10000;
  long long solver_flips = 0;
  double solver_sum = 0.0;
  double solver_max = 0.0;
  for (int i = 0; i < solver_runs; ++i) {
    RandomStream rng = derive_stream(20240601, static_cast<std::uint64_t>(i));
    const SolveResult result = greedy_with_error(kWorked, sigma, rng);
    if (result.route.order[0] == 2) ++solver_flips;
    solver_sum += result.total_length;
    solver_max = std::max(solver_max, result.total_length);
  }
  const double solver_flip_rate = static_cast<double>(solver_flips) / solver_runs;
  const double solver_mean = solver_sum / solver_runs;

  CHECK(oracle_flip_rate > 0.0);
  CHECK(std::abs(solver_flip_rate - oracle_flip_rate) < 0.02);
  CHECK(std::abs(solver_mean - oracle_mean) < 0.02);
  CHECK(solver_mean >= 5.5 - 0.15);
  CHECK(solver_max > 5.5);  // some seeds must flip into the worse [2,1,0] route
}

TEST_CASE("argmin scale invariance: routes unchanged, lengths scale by k") {
  RandomStream rng(310, 0);
  const double k = 0.1;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 8);  // 2..9
    const Instance instance = opath_test::random_instance(rng, n);
    const Instance small = opath_test::scaled(instance, k);

    const SolveResult g1 = greedy(instance);
    const SolveResult g2 = greedy(small);
    CHECK(g1.route.order == g2.route.order);
    CHECK(rel_close(g2.total_length, k * g1.total_length));

    RandomStream noise1(555 + rep, 0), noise2(555 + rep, 0);
    const SolveResult e1 = greedy_with_error(instance, 0.3, noise1);
    const SolveResult e2 = greedy_with_error(small, 0.3, noise2);
    CHECK(e1.route.order == e2.route.order);
    CHECK(rel_close(e2.total_length, k * e1.total_length));

    const SolveResult h1 = exact_held_karp(instance);
    const SolveResult h2 = exact_held_karp(small);
    CHECK(h1.route.order == h2.route.order);
    CHECK(rel_close(h2.total_length, k * h1.total_length));

    const SolveResult x1 = exact_exhaustive(instance);
    const SolveResult x2 = exact_exhaustive(small);
    CHECK(x1.route.order == x2.route.order);
    CHECK(rel_close(x2.total_length, k * x1.total_length));
  }
}
