#pragma once

namespace qdeform {

inline constexpr const char* kToolName = "qdeform";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qdeform
