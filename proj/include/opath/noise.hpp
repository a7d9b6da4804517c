#pragma once

#include <cstdint>
#include <random>

namespace opath {

/// Name of the sampling recipe, recorded in results metadata so outputs can
/// be reproduced across releases: mt19937_64 engine, 53-bit uniforms,
/// Box-Muller normal transform, rejection-sampled truncation.
inline constexpr const char kRngAlgorithm[] = "mt19937_64-boxmuller-v1";

/// A seeded random stream. Identical (seed, stream_id) pairs produce
/// identical sample sequences across runs and worker counts; each trial of
/// an experiment owns its derived stream exclusively.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  /// Uniform draw in [0, 1) with 53 random bits.
  double next_unit();

  /// Normal draw via the Box-Muller transform. Consumes exactly two
  /// uniforms per call.
  double next_normal(double mean, double stddev);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Perception-error distribution: N(mean, sigma^2) conditioned on
/// [lower, upper].
struct TruncNormalParams {
  double mean = 1.0;
  double sigma = 0.0;
  double lower = 0.7;
  double upper = 1.3;

  bool valid() const noexcept;
};

inline constexpr int kMaxRejectionDraws = 10000;

/// Rejection-sampled truncated normal draw. sigma == 0 returns `mean`
/// exactly and consumes no randomness. After kMaxRejectionDraws failed
/// attempts (unreachable for sigma <= 1 with the default cutoffs) the last
/// base draw is clamped to the interval.
double sample_trunc_normal(const TruncNormalParams& params, RandomStream& rng);

/// Independent, reproducible stream for one trial of an experiment.
RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index);

/// Derived master seed for nested sweeps (one sub-experiment per key).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t key);

}  // namespace opath
