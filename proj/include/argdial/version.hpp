#pragma once

namespace argdial {

inline constexpr const char* kToolName = "argdial";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolVersion = "argdial 0.1.0";

}  // namespace argdial
