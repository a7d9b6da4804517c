#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opath/geometry.hpp"
#include "opath/noise.hpp"

namespace opath {

/// Default master seed used by the CLI so bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 42;

enum class ExactSolver { kHeldKarp, kExhaustive };

struct ExperimentConfig {
  int n_collectibles = 10;
  int trials = 1000;
  double plane_width = 1000.0;
  double plane_height = 1000.0;
  Point start{500.0, 500.0};
  std::optional<double> sigma;  // absent: noiseless greedy
  std::uint64_t master_seed = kDefaultSeed;
  ExactSolver exact_solver = ExactSolver::kHeldKarp;
  int threads = 0;  // 0: runtime default; never part of the results identity
};

/// Throws ConfigError when a field is out of range.
void validate(const ExperimentConfig& config);

struct TrialRecord {
  int trial_index = 0;
  double greedy_length = 0.0;
  double optimal_length = 0.0;
  double excess_ratio_pct = 0.0;  // 100 * (greedy - optimal) / optimal
};

struct TrialStats {
  double mean = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double min = 0.0;
  double max = 0.0;
  int trials = 0;
};

/// Arithmetic mean plus quantiles by linear interpolation between order
/// statistics: for quantile p over sorted v[0..n-1], h = p*(n-1) and the
/// result is v[floor(h)] + (h - floor(h)) * (v[floor(h)+1] - v[floor(h)]).
/// Throws std::invalid_argument on empty input.
TrialStats summarize(const std::vector<double>& values);

/// Instance with config.start and n_collectibles points drawn i.i.d.
/// uniformly on [0, width] x [0, height]; x before y for each point, points
/// in index order.
Instance generate_instance(const ExperimentConfig& config, RandomStream& rng);

struct ExperimentResult {
  std::vector<TrialRecord> records;  // ordered by trial_index
  TrialStats stats;                  // over excess_ratio_pct
};

/// Monte Carlo harness: per trial, a fresh uniform instance (stream
/// derive_stream(master_seed, t)), the greedy route (or noisy greedy with
/// stream derive_stream(master_seed, trials + t) when sigma is set), and the
/// exact optimum. Trials run in parallel when OpenMP is enabled; the output
/// is a pure function of the config, identical for any worker count.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Single-threaded reference implementation of run_experiment; kept for
/// testing the parallel path against.
ExperimentResult run_experiment_serial(const ExperimentConfig& config);

struct SweepRow {
  double key = 0.0;  // swept N or sigma
  TrialStats stats;
};

/// One experiment per N, each with a per-N derived master seed.
std::vector<SweepRow> sweep_n(const std::vector<int>& n_values, const ExperimentConfig& base);

/// One noisy-greedy experiment per sigma. All levels share the base master
/// seed, so every sigma sees identical instances (paired comparison).
std::vector<SweepRow> sweep_sigma(const std::vector<double>& sigma_values,
                                  const ExperimentConfig& base);

}  // namespace opath
