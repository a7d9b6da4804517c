#pragma once

namespace opath {

inline constexpr const char kToolName[] = "opath";
inline constexpr const char kToolVersion[] = "0.1.0";

}  // namespace opath
