#pragma once

namespace flagsphere {

inline constexpr const char* kToolName = "flagsphere";
inline constexpr const char* kToolVersion = "0.1.0";

/// Version of the structured report line format.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace flagsphere
