#pragma once

namespace qtherm {

inline constexpr const char* version = "0.1.0";

// Unit convention used throughout: hbar = k_B = 1, so frequencies and
// temperatures are dimensionless reals on a common energy scale.
inline constexpr const char* unit_convention = "hbar = k_B = 1";

}  // namespace qtherm
