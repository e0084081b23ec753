#pragma once

namespace hcpair {

inline constexpr const char* tool_name = "hcpair";
inline constexpr const char* tool_version = "1.0.0";

}  // namespace hcpair
