#pragma once

namespace gyro {

inline constexpr const char* kToolName = "gyro";
inline constexpr const char* kVersion = "0.1.0";

} // namespace gyro
