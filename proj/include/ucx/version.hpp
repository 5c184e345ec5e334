#pragma once

namespace ucx {

inline constexpr const char* kToolName = "ucx";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "ucx-report/1";

}  // namespace ucx
