#pragma once

namespace latticetri {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace latticetri
