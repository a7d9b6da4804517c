#include "opath/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

#include "opath/errors.hpp"
#include "opath/solvers.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace opath {

void validate(const ExperimentConfig& config) {
  if (config.n_collectibles < 1) {
    throw ConfigError("n_collectibles must be >= 1 (excess ratio is undefined for empty instances)");
  }
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(config.plane_width > 0.0) || !(config.plane_height > 0.0)) {
    throw ConfigError("plane dimensions must be positive");
  }
  if (!is_finite(config.start) || config.start.x < 0.0 || config.start.x > config.plane_width ||
      config.start.y < 0.0 || config.start.y > config.plane_height) {
    throw ConfigError("start must lie inside [0, width] x [0, height]");
  }
  if (config.sigma.has_value() && !(*config.sigma >= 0.0)) {
    throw ConfigError("sigma must be >= 0");
  }
  const int limit =
      config.exact_solver == ExactSolver::kHeldKarp ? kHeldKarpLimit : kExhaustiveDefaultLimit;
  if (config.n_collectibles > limit) {
    throw ConfigError("n_collectibles " + std::to_string(config.n_collectibles) +
                      " exceeds the exact-solver limit of " + std::to_string(limit));
  }
  if (config.threads < 0) throw ConfigError("threads must be >= 0");
}

TrialStats summarize(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty input");
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const auto quantile = [&sorted](double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
  };
  TrialStats stats;
  stats.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
               static_cast<double>(sorted.size());
  stats.q1 = quantile(0.25);
  stats.median = quantile(0.5);
  stats.q3 = quantile(0.75);
  stats.min = sorted.front();
  stats.max = sorted.back();
  stats.trials = static_cast<int>(sorted.size());
  return stats;
}

Instance generate_instance(const ExperimentConfig& config, RandomStream& rng) {
  Instance instance;
  instance.start = config.start;
  instance.collectibles.reserve(static_cast<std::size_t>(config.n_collectibles));
  for (int i = 0; i < config.n_collectibles; ++i) {
    const double x = rng.next_unit() * config.plane_width;
    const double y = rng.next_unit() * config.plane_height;
    instance.collectibles.push_back({x, y});
  }
  return instance;
}

namespace {

TrialRecord run_trial(const ExperimentConfig& config, int trial) {
  RandomStream geometry = derive_stream(config.master_seed, static_cast<std::uint64_t>(trial));
  const Instance instance = generate_instance(config, geometry);

  SolveResult heuristic;
  if (config.sigma.has_value()) {
    RandomStream noise = derive_stream(
        config.master_seed,
        static_cast<std::uint64_t>(config.trials) + static_cast<std::uint64_t>(trial));
    heuristic = greedy_with_error(instance, *config.sigma, noise);
  } else {
    heuristic = greedy(instance);
  }

  const SolveResult exact = config.exact_solver == ExactSolver::kHeldKarp
                                ? exact_held_karp(instance)
                                : exact_exhaustive(instance);

  TrialRecord record;
  record.trial_index = trial;
  record.greedy_length = heuristic.total_length;
  record.optimal_length = exact.total_length;
  record.excess_ratio_pct =
      100.0 * (heuristic.total_length - exact.total_length) / exact.total_length;
  return record;
}

ExperimentResult collect(std::vector<TrialRecord> records) {
  std::vector<double> ratios;
  ratios.reserve(records.size());
  for (const TrialRecord& record : records) ratios.push_back(record.excess_ratio_pct);
  ExperimentResult result;
  result.records = std::move(records);
  result.stats = summarize(ratios);
  return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
  std::exception_ptr first_error = nullptr;
#if defined(_OPENMP)
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int t = 0; t < config.trials; ++t) {
    try {
      records[static_cast<std::size_t>(t)] = run_trial(config, t);
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical(opath_trial_error)
#endif
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return collect(std::move(records));
}

ExperimentResult run_experiment_serial(const ExperimentConfig& config) {
  validate(config);
  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
  for (int t = 0; t < config.trials; ++t) {
    records[static_cast<std::size_t>(t)] = run_trial(config, t);
  }
  return collect(std::move(records));
}

std::vector<SweepRow> sweep_n(const std::vector<int>& n_values, const ExperimentConfig& base) {
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    ExperimentConfig config = base;
    config.n_collectibles = n;
    config.master_seed = derive_seed(base.master_seed, static_cast<std::uint64_t>(n));
    rows.push_back({static_cast<double>(n), run_experiment(config).stats});
  }
  return rows;
}

std::vector<SweepRow> sweep_sigma(const std::vector<double>& sigma_values,
                                  const ExperimentConfig& base) {
  std::vector<SweepRow> rows;
  rows.reserve(sigma_values.size());
  for (double sigma : sigma_values) {
    ExperimentConfig config = base;
    config.sigma = sigma;
    rows.push_back({sigma, run_experiment(config).stats});
  }
  return rows;
}

}  // namespace opath
