#pragma once

namespace polyknot {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polyknot
