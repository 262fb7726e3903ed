#include "paramp/validate.hpp"

#include <cmath>

#include "paramp/errors.hpp"

namespace paramp {
namespace {

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || !(value > 0.0)) throw NonPositiveParameter(field);
}

void require_nonnegative(double value, const char* field) {
    if (!std::isfinite(value) || value < 0.0)
        throw NonPositiveParameter(field, "must be >= 0");
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

constexpr double k_harmonic_tol = 1e-9;

}  // namespace

void check_cavity(const CavityParams& cavity) {
    require_positive(cavity.mass_kg, "mass_kg");
    require_positive(cavity.gap_m, "gap_m");
    require_positive(cavity.area_m2, "area_m2");
    require_positive(cavity.omega, "omega");
    if (!std::isfinite(cavity.q_factor) || !(cavity.q_factor >= 1.0))
        throw NonPositiveParameter("q_factor", "must be >= 1");
}

void check_pump_cavity(const PumpCavityParams& pump) {
    require_positive(pump.omega_p, "pump.omega_p");
    require_positive(pump.q_factor, "pump.q_factor");
}

Validated validate(const CavityParams& cavity, const PumpDrive& drive) {
    check_cavity(cavity);
    Validated out{cavity, drive, std::nullopt};

    if (const auto* kin = std::get_if<KinematicVelocity>(&drive)) {
        require_nonnegative(kin->v_2w, "v_2w");
        if (!std::isfinite(kin->phase))
            throw NonPositiveParameter("phase", "must be finite");
    } else if (const auto* nb = std::get_if<NoBiasField>(&drive)) {
        require_nonnegative(nb->e_p, "e_p");
        require_positive(nb->omega_p, "omega_p");
        if (!close_rel(nb->omega_p, cavity.omega, k_harmonic_tol))
            throw FrequencyMismatch(
                "no-bias pump must run at the signal frequency (omega_p = omega)");
    } else if (const auto* dc = std::get_if<DcBiasField>(&drive)) {
        require_nonnegative(dc->e_p, "e_p");
        require_nonnegative(dc->e_dc, "e_dc");
        require_positive(dc->omega_p, "omega_p");
        if (!close_rel(dc->omega_p, 2.0 * cavity.omega, k_harmonic_tol))
            throw FrequencyMismatch(
                "DC-biased pump must run at the second harmonic (omega_p = 2*omega)");
        if (!(dc->e_dc > dc->e_p))
            throw BiasRegimeViolation("e_dc must exceed e_p");
        if (dc->e_dc < 10.0 * dc->e_p)
            out.warning =
                "e_dc/e_p < 10: the first-harmonic force term only dominates marginally";
    }
    return out;
}

}  // namespace paramp
