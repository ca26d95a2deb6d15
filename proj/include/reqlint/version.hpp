// ============================================================================
// version.hpp — tool identity
// ============================================================================

#pragma once

namespace reqlint {

inline constexpr const char* kToolName = "reqlint";
inline constexpr const char* kVersion = "0.1.0";

} // namespace reqlint
