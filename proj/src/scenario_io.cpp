#include "opath/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "opath/errors.hpp"

namespace opath {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double read_coordinate(const json& value, const std::string& field) {
  if (!value.is_number()) {
    throw FieldError("scenario: " + field + " must be a number", field);
  }
  const double v = value.get<double>();
  if (!std::isfinite(v)) {
    throw FieldError("scenario: " + field + " is not finite", field);
  }
  return v;
}

Point read_point(const json& value, const std::string& field) {
  if (!value.is_array() || value.size() != 2) {
    throw FieldError("scenario: " + field + " must be an [x, y] pair", field);
  }
  return {read_coordinate(value[0], field + "[0]"), read_coordinate(value[1], field + "[1]")};
}

}  // namespace

Instance parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("scenario: " + std::string(e.what()), line, column);
  } catch (const json::out_of_range& e) {
    // e.g. 1e999: the literal overflows double before any field is visible
    throw FieldError("scenario: numeric literal is not a finite double (" +
                         std::string(e.what()) + ")",
                     "");
  }
  if (!doc.is_object()) {
    throw FieldError("scenario: top-level value must be an object", "");
  }
  if (!doc.contains("format_version")) {
    throw FieldError("scenario: missing format_version", "format_version");
  }
  if (!doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kScenarioFormatVersion) {
    throw FieldError("scenario: unsupported format_version (expected " +
                         std::to_string(kScenarioFormatVersion) + ")",
                     "format_version");
  }
  if (!doc.contains("start")) throw FieldError("scenario: missing start", "start");
  if (!doc.contains("collectibles")) {
    throw FieldError("scenario: missing collectibles", "collectibles");
  }

  Instance instance;
  instance.start = read_point(doc["start"], "start");
  const json& list = doc["collectibles"];
  if (!list.is_array()) {
    throw FieldError("scenario: collectibles must be an array", "collectibles");
  }
  instance.collectibles.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    instance.collectibles.push_back(read_point(list[i], "collectibles[" + std::to_string(i) + "]"));
  }
  return instance;
}

Instance load_scenario(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("failed reading scenario file: " + path);
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Instance& instance) {
  json doc;
  doc["format_version"] = kScenarioFormatVersion;
  doc["start"] = {instance.start.x, instance.start.y};
  json list = json::array();
  for (const Point& p : instance.collectibles) list.push_back({p.x, p.y});
  doc["collectibles"] = std::move(list);
  return doc.dump() + "\n";
}

}  // namespace opath
