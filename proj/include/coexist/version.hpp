#pragma once

#include <string_view>

namespace coexist {

inline constexpr std::string_view kToolName = "coexist";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportFormatVersion = 1;

}  // namespace coexist
