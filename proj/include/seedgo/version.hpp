#pragma once

namespace seedgo {

inline constexpr const char* kToolName = "seedgo";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace seedgo
