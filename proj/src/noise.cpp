#include "opath/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opath/errors.hpp"

namespace opath {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; full 64-bit avalanche.
std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix64(seed + kGolden * (stream_id + 1))) {}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::next_normal(double mean, double stddev) {
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double radius = std::sqrt(-2.0 * std::log1p(-u1));  // log(1 - u1), never log(0)
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

bool TruncNormalParams::valid() const noexcept {
  return std::isfinite(mean) && std::isfinite(sigma) && std::isfinite(lower) &&
         std::isfinite(upper) && sigma >= 0.0 && lower < mean && mean < upper;
}

double sample_trunc_normal(const TruncNormalParams& params, RandomStream& rng) {
  if (!params.valid()) {
    throw ConfigError("truncated normal requires lower < mean < upper and sigma >= 0");
  }
  if (params.sigma == 0.0) return params.mean;
  double draw = params.mean;
  for (int attempt = 0; attempt < kMaxRejectionDraws; ++attempt) {
    draw = rng.next_normal(params.mean, params.sigma);
    if (draw >= params.lower && draw <= params.upper) return draw;
  }
  return std::clamp(draw, params.lower, params.upper);
}

RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
  return RandomStream(master_seed, trial_index);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t key) {
  return mix64(master_seed ^ mix64(key + 0x8CB92BA72F3D8DD7ULL));
}

}  // namespace opath
