#pragma once

namespace clusterdt {

inline constexpr const char* kToolName = "dtlab";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace clusterdt
