#pragma once

namespace stepskew {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "stepskew-report-v1";

}  // namespace stepskew
