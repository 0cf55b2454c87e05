#pragma once

namespace monolab {

inline constexpr const char* kToolName = "monolab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace monolab
