#pragma once

#include <string>

#include "opath/geometry.hpp"

namespace opath {

inline constexpr int kScenarioFormatVersion = 1;

/// Parses the JSON scenario format:
///   {"format_version": 1, "start": [x, y], "collectibles": [[x, y], ...]}
/// Coordinates may be integers or decimals. Throws ParseError (with
/// line/column) on malformed text and FieldError (naming the field) on
/// missing or non-finite values.
Instance parse_scenario(const std::string& text);

/// Reads and parses a scenario file. Throws IoError if unreadable.
Instance load_scenario(const std::string& path);

/// Canonical serialization; parse_scenario(serialize_scenario(x)) == x.
std::string serialize_scenario(const Instance& instance);

}  // namespace opath
