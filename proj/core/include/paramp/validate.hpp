#pragma once

#include <optional>
#include <string>

#include "paramp/types.hpp"

namespace paramp {

struct Validated {
    CavityParams cavity;
    PumpDrive drive;
    std::optional<std::string> warning;  // set for accepted-but-marginal inputs
};

/// Checks every type invariant plus the drive/cavity harmonic relation
/// (no-bias pump at omega, DC-biased pump at 2*omega, both to 1e-9 relative).
/// Returns the inputs unchanged; a weak-bias ratio e_dc/e_p < 10 passes with
/// a warning. Throws NonPositiveParameter, FrequencyMismatch or
/// BiasRegimeViolation.
Validated validate(const CavityParams& cavity, const PumpDrive& drive);

void check_cavity(const CavityParams& cavity);
void check_pump_cavity(const PumpCavityParams& pump);

}  // namespace paramp
