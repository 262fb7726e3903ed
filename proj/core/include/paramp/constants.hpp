#pragma once

namespace paramp {

// CODATA values, fixed rather than configurable so every derived number is
// reproducible bit-for-bit across modules and runs.
struct PhysicalConstants {
    static constexpr double epsilon0 = 8.8541878128e-12;  // vacuum permittivity, F/m
    static constexpr double c = 2.99792458e8;             // speed of light, m/s
};

inline constexpr double k_epsilon0 = PhysicalConstants::epsilon0;
inline constexpr double k_c = PhysicalConstants::c;

}  // namespace paramp
