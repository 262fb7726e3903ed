#include "paramp/thresholds.hpp"

#include <cmath>
#include <numbers>

#include "paramp/constants.hpp"
#include "paramp/errors.hpp"
#include "paramp/validate.hpp"

namespace paramp {
namespace {

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || !(value > 0.0)) throw NonPositiveParameter(field);
}

void require_nonnegative(double value, const char* field) {
    if (!std::isfinite(value) || value < 0.0)
        throw NonPositiveParameter(field, "must be >= 0");
}

}  // namespace

double energy_density(double e_field) {
    return 0.5 * k_epsilon0 * e_field * e_field;
}

double pressure_on_plate(double e_field) { return energy_density(e_field); }

StressTensor maxwell_stress(const Vec3& e_field, const Vec3& b_field) {
    const double c2 = k_c * k_c;
    const double e[3] = {e_field.x, e_field.y, e_field.z};
    const double b[3] = {b_field.x, b_field.y, b_field.z};
    const double quad = e[0] * e[0] + e[1] * e[1] + e[2] * e[2] +
                        c2 * (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    StressTensor out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // c2*(b_i b_j), not (c2*b_i)*b_j, so rounding keeps T symmetric
            double v = e[i] * e[j] + c2 * (b[i] * b[j]);
            if (i == j) v -= 0.5 * quad;
            out.t[i][j] = k_epsilon0 * v;
        }
    }
    return out;
}

double averaged_pump_power(double signal_e0, double area_m2, double v_2w) {
    require_nonnegative(signal_e0, "signal_e0");
    require_nonnegative(area_m2, "area_m2");
    require_nonnegative(v_2w, "v_2w");
    return 0.125 * k_epsilon0 * signal_e0 * signal_e0 * area_m2 * v_2w;
}

double gain_coefficient(double v_2w, double gap_m) {
    require_positive(gap_m, "gap_m");
    require_nonnegative(v_2w, "v_2w");
    return v_2w / (4.0 * gap_m);
}

RingDown ring_down(double omega, double q_factor) {
    require_positive(omega, "omega");
    require_positive(q_factor, "q_factor");
    return {omega / q_factor, q_factor / omega};
}

double threshold_velocity(double omega, double gap_m, double q_factor) {
    require_positive(omega, "omega");
    require_positive(gap_m, "gap_m");
    require_positive(q_factor, "q_factor");
    return 4.0 * omega * gap_m / q_factor;
}

ThresholdEnergy threshold_energy(const CavityParams& cavity) {
    check_cavity(cavity);
    const double k = 4.0 * cavity.mass_kg * cavity.omega * cavity.omega *
                     cavity.gap_m * cavity.gap_m /
                     (cavity.q_factor * cavity.q_factor);
    return {k, 2.0 * k};
}

double braginsky_threshold(double mass_kg, double omega_s, double length_m,
                           double q_idler, double q_signal) {
    require_positive(mass_kg, "mass_kg");
    require_positive(omega_s, "omega_s");
    require_nonnegative(length_m, "length_m");  // L = 0 degenerates to zero threshold
    require_positive(q_idler, "q_idler");
    require_positive(q_signal, "q_signal");
    return 0.5 * mass_kg * omega_s * omega_s * length_m * length_m /
           (q_idler * q_signal);
}

double walls_milburn_velocity_ratio(double q_factor) {
    require_positive(q_factor, "q_factor");
    return 1.0 / q_factor;
}

double mirror_velocity(double displacement_m, double omega) {
    require_nonnegative(displacement_m, "displacement_m");
    require_positive(omega, "omega");
    return displacement_m * omega;
}

double rough_velocity_ratio(double q_factor) {
    require_positive(q_factor, "q_factor");
    return 2.0 * std::numbers::pi / q_factor;
}

double stored_energy_to_power(double energy_j, const PumpCavityParams& pump) {
    require_nonnegative(energy_j, "energy_j");
    check_pump_cavity(pump);
    return pump.omega_p * energy_j / pump.q_factor;
}

double threshold_power_no_bias(const CavityParams& cavity,
                               const PumpCavityParams& pump) {
    return stored_energy_to_power(threshold_energy(cavity).total_j, pump);
}

ThresholdReport threshold_report(const CavityParams& cavity,
                                 const PumpCavityParams& pump) {
    check_cavity(cavity);
    check_pump_cavity(pump);
    const RingDown rd = ring_down(cavity.omega, cavity.q_factor);
    const double v_th = threshold_velocity(cavity.omega, cavity.gap_m, cavity.q_factor);
    const ThresholdEnergy u = threshold_energy(cavity);
    ThresholdReport r{};
    r.kappa_at_threshold = gain_coefficient(v_th, cavity.gap_m);
    r.gamma = rd.gamma;
    r.tau = rd.tau;
    r.v_threshold = v_th;
    r.k_threshold_j = u.kinetic_j;
    r.u_threshold_j = u.total_j;
    r.p_threshold_no_bias_w = threshold_power_no_bias(cavity, pump);
    r.braginsky_u_j = braginsky_threshold(cavity.mass_kg, cavity.omega,
                                          4.0 * cavity.gap_m, cavity.q_factor,
                                          cavity.q_factor);
    r.walls_milburn_vc = walls_milburn_velocity_ratio(cavity.q_factor);
    r.rough_vc = rough_velocity_ratio(cavity.q_factor);
    return r;
}

}  // namespace paramp
