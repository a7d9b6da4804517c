#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "opath/experiments.hpp"

namespace opath {

/// Metadata header echoed into every emitted results table.
struct ResultsMeta {
  std::string tool;           // e.g. "opath 0.1.0"
  std::string rng_algorithm;  // e.g. kRngAlgorithm
  std::uint64_t master_seed = 0;
  std::string config_echo;  // free-form one-line config summary
};

inline constexpr const char kTrialsHeader[] =
    "trial_index,greedy_length,optimal_length,excess_ratio_pct";
inline constexpr const char kSweepHeader[] = "sweep_key,mean,q1,median,q3,min,max,trials";

/// Writes a metadata-prefixed CSV of per-trial records ('#' metadata lines,
/// header row, one row per trial, LF endings, reals at 9 significant
/// digits). Returns bytes written. Throws std::invalid_argument on empty
/// input and IoError on stream failure.
std::size_t write_trials_csv(const ResultsMeta& meta, const std::vector<TrialRecord>& records,
                             std::ostream& out);

/// Same envelope for per-sweep summary rows.
std::size_t write_sweep_csv(const ResultsMeta& meta, const std::vector<SweepRow>& rows,
                            std::ostream& out);

std::string format_trials_csv(const ResultsMeta& meta, const std::vector<TrialRecord>& records);
std::string format_sweep_csv(const ResultsMeta& meta, const std::vector<SweepRow>& rows);

struct ParsedResults {
  enum class Kind { kTrials, kSweep };
  ResultsMeta meta;
  Kind kind = Kind::kTrials;
  std::vector<TrialRecord> records;  // kind == kTrials
  std::vector<SweepRow> sweep;       // kind == kSweep
};

/// Reads back a results CSV produced by the writers above; format_*(parse(x))
/// reproduces x byte for byte. Throws ParseError on malformed input.
ParsedResults parse_results_csv(const std::string& text);

}  // namespace opath
