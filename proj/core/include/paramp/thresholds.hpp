#pragma once

#include <array>

#include "paramp/types.hpp"

namespace paramp {

struct Vec3 {
    double x{}, y{}, z{};
};

/// Maxwell stress tensor evaluated at a point, Pa. Symmetric by construction.
struct StressTensor {
    std::array<std::array<double, 3>, 3> t{};

    [[nodiscard]] double operator()(int i, int j) const { return t[i][j]; }
    [[nodiscard]] double trace() const { return t[0][0] + t[1][1] + t[2][2]; }
};

/// Instantaneous electric field energy density, u = eps0 E^2 / 2, J/m^3.
double energy_density(double e_field);

/// Pressure on a conducting plate terminating a field E. Numerically identical
/// to energy_density (Pa and J/m^3 coincide); kept as its own operation because
/// it is the force side of the work balance.
double pressure_on_plate(double e_field);

/// T_ij = eps0 [E_i E_j + c^2 B_i B_j - (1/2) delta_ij (E.E + c^2 B.B)].
StressTensor maxwell_stress(const Vec3& e_field, const Vec3& b_field);

/// Time-averaged power a pump delivers by moving the plate at velocity
/// amplitude v_2w against a capacitor field of amplitude signal_e0:
/// P = eps0 signal_e0^2 A v_2w / 8.
double averaged_pump_power(double signal_e0, double area_m2, double v_2w);

/// Exponential gain coefficient of the stored energy density,
/// kappa = v_2w / (4 d0), 1/s.
double gain_coefficient(double v_2w, double gap_m);

struct RingDown {
    double gamma;  // energy loss rate, 1/s
    double tau;    // ring-down time, s
};

/// gamma = omega/Q, tau = Q/omega.
RingDown ring_down(double omega, double q_factor);

/// Minimum plate velocity amplitude for oscillation: v = 4 omega d0 / Q.
/// Satisfies gain_coefficient(v, d0) == ring_down(omega, Q).gamma.
double threshold_velocity(double omega, double gap_m, double q_factor);

struct ThresholdEnergy {
    double kinetic_j;  // time-averaged plate kinetic energy at threshold
    double total_j;    // kinetic + potential = 2 * kinetic
};

/// K = 4 m omega^2 d0^2 / Q^2, U = 2K.
ThresholdEnergy threshold_energy(const CavityParams& cavity);

/// Fabry-Perot parametric-instability threshold energy,
/// U = m omega_s^2 L^2 / (2 Q_i Q_s). Matches threshold_energy().total_j
/// under the mapping L = 4 d0, Q_i = Q_s = Q.
double braginsky_threshold(double mass_kg, double omega_s, double length_m,
                           double q_idler, double q_signal);

/// Threshold mirror-velocity ratio v/c = 1/Q from the squeezed-state
/// oscillation condition eps * omega * Q / c >= 1.
double walls_milburn_velocity_ratio(double q_factor);

/// Peak velocity of a mirror oscillating sinusoidally with displacement
/// amplitude eps: v = eps * omega.
double mirror_velocity(double displacement_m, double omega);

/// Order-of-magnitude threshold ratio v/c ~ 2 pi / Q (using d0 omega ~ 2 pi c).
/// The exact ratio from threshold_velocity with that geometry is 8 pi / Q,
/// a factor 4 above this estimate.
double rough_velocity_ratio(double q_factor);

/// Steady-state power needed to hold energy U in the pump cavity:
/// P = omega_p U / Q_p.
double stored_energy_to_power(double energy_j, const PumpCavityParams& pump);

/// Threshold pump power without DC bias,
/// P = 8 m omega_p omega_s^2 d0^2 / (Q_s^2 Q_p), computed as
/// stored_energy_to_power(threshold_energy(cavity).total_j, pump) so the
/// compositional identity holds exactly.
double threshold_power_no_bias(const CavityParams& cavity,
                               const PumpCavityParams& pump);

/// All analytic threshold quantities for one design.
struct ThresholdReport {
    double kappa_at_threshold;    // 1/s
    double gamma;                 // 1/s
    double tau;                   // s
    double v_threshold;           // m/s
    double k_threshold_j;         // J
    double u_threshold_j;         // J
    double p_threshold_no_bias_w; // W
    double braginsky_u_j;         // J, under the L = 4 d0, Q_i = Q_s mapping
    double walls_milburn_vc;      // dimensionless
    double rough_vc;              // dimensionless
};

ThresholdReport threshold_report(const CavityParams& cavity,
                                 const PumpCavityParams& pump);

}  // namespace paramp
