#pragma once

#include <cstdio>
#include <string>

namespace opath {

/// Fixed rendering for all emitted reals: 9 significant digits, '.' decimal
/// separator. Keeps every artifact byte-deterministic.
inline std::string g9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return std::string(buf);
}

}  // namespace opath
