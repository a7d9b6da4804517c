#include "opath/results_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "opath/errors.hpp"
#include "opath/numfmt.hpp"

namespace opath {

namespace {

void append_meta(std::string& out, const ResultsMeta& meta) {
  out += "# tool: " + meta.tool + "\n";
  out += "# rng: " + meta.rng_algorithm + "\n";
  out += "# seed: " + std::to_string(meta.master_seed) + "\n";
  out += "# config: " + meta.config_echo + "\n";
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(sep, begin);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + 1;
  }
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("results: malformed real '" + std::string(field) + "'", line_no, 1);
  }
  return value;
}

long long parse_int(std::string_view field, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("results: malformed integer '" + std::string(field) + "'", line_no, 1);
  }
  return value;
}

std::size_t write_csv(const std::string& text, std::ostream& out) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("results: stream write failed");
  return text.size();
}

}  // namespace

std::string format_trials_csv(const ResultsMeta& meta, const std::vector<TrialRecord>& records) {
  if (records.empty()) throw std::invalid_argument("format_trials_csv: no records");
  std::string out;
  out.reserve(records.size() * 48 + 160);
  append_meta(out, meta);
  out += kTrialsHeader;
  out += '\n';
  for (const TrialRecord& r : records) {
    out += std::to_string(r.trial_index);
    out += ',';
    out += g9(r.greedy_length);
    out += ',';
    out += g9(r.optimal_length);
    out += ',';
    out += g9(r.excess_ratio_pct);
    out += '\n';
  }
  return out;
}

std::string format_sweep_csv(const ResultsMeta& meta, const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("format_sweep_csv: no rows");
  std::string out;
  append_meta(out, meta);
  out += kSweepHeader;
  out += '\n';
  for (const SweepRow& row : rows) {
    out += g9(row.key);
    out += ',';
    out += g9(row.stats.mean);
    out += ',';
    out += g9(row.stats.q1);
    out += ',';
    out += g9(row.stats.median);
    out += ',';
    out += g9(row.stats.q3);
    out += ',';
    out += g9(row.stats.min);
    out += ',';
    out += g9(row.stats.max);
    out += ',';
    out += std::to_string(row.stats.trials);
    out += '\n';
  }
  return out;
}

std::size_t write_trials_csv(const ResultsMeta& meta, const std::vector<TrialRecord>& records,
                             std::ostream& out) {
  return write_csv(format_trials_csv(meta, records), out);
}

std::size_t write_sweep_csv(const ResultsMeta& meta, const std::vector<SweepRow>& rows,
                            std::ostream& out) {
  return write_csv(format_sweep_csv(meta, rows), out);
}

ParsedResults parse_results_csv(const std::string& text) {
  ParsedResults result;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (header_seen) throw ParseError("results: metadata after header", line_no, 1);
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("results: malformed metadata line", line_no, 1);
      }
      std::string_view key = line.substr(1, colon - 1);
      std::string_view value = line.substr(colon + 1);
      while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
      while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
      if (key == "tool") {
        result.meta.tool = std::string(value);
      } else if (key == "rng") {
        result.meta.rng_algorithm = std::string(value);
      } else if (key == "seed") {
        result.meta.master_seed = static_cast<std::uint64_t>(parse_int(value, line_no));
      } else if (key == "config") {
        result.meta.config_echo = std::string(value);
      } else {
        throw ParseError("results: unknown metadata key '" + std::string(key) + "'", line_no, 1);
      }
      continue;
    }

    if (!header_seen) {
      if (line == kTrialsHeader) {
        result.kind = ParsedResults::Kind::kTrials;
      } else if (line == kSweepHeader) {
        result.kind = ParsedResults::Kind::kSweep;
      } else {
        throw ParseError("results: unrecognized header row", line_no, 1);
      }
      header_seen = true;
      continue;
    }

    const auto fields = split(line, ',');
    if (result.kind == ParsedResults::Kind::kTrials) {
      if (fields.size() != 4) throw ParseError("results: expected 4 columns", line_no, 1);
      TrialRecord r;
      r.trial_index = static_cast<int>(parse_int(fields[0], line_no));
      r.greedy_length = parse_double(fields[1], line_no);
      r.optimal_length = parse_double(fields[2], line_no);
      r.excess_ratio_pct = parse_double(fields[3], line_no);
      result.records.push_back(r);
    } else {
      if (fields.size() != 8) throw ParseError("results: expected 8 columns", line_no, 1);
      SweepRow row;
      row.key = parse_double(fields[0], line_no);
      row.stats.mean = parse_double(fields[1], line_no);
      row.stats.q1 = parse_double(fields[2], line_no);
      row.stats.median = parse_double(fields[3], line_no);
      row.stats.q3 = parse_double(fields[4], line_no);
      row.stats.min = parse_double(fields[5], line_no);
      row.stats.max = parse_double(fields[6], line_no);
      row.stats.trials = static_cast<int>(parse_int(fields[7], line_no));
      result.sweep.push_back(row);
    }
  }
  if (!header_seen) throw ParseError("results: missing header row", line_no, 1);
  if (result.records.empty() && result.sweep.empty()) {
    throw ParseError("results: no data rows", line_no, 1);
  }
  return result;
}

}  // namespace opath
