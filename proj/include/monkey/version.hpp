#pragma once

namespace monkey {

inline constexpr const char* kVersion = "0.1.0";

} // namespace monkey
