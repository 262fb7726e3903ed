#pragma once

#include <variant>

namespace paramp {

// SI units throughout; angular frequency (rad/s) is the canonical frequency.
// Cyclic-frequency input is converted at the CLI boundary only.

/// Signal cavity in its parallel-plate LC model.
/// The single omega enforces degenerate operation (omega_s = omega_i).
struct CavityParams {
    double mass_kg{};   // pellicle mass
    double gap_m{};     // equilibrium plate spacing d0
    double area_m2{};   // plate area
    double omega{};     // degenerate signal/idler angular frequency, rad/s
    double q_factor{};  // signal-cavity quality factor, >= 1
};

/// Pump cavity, needed only to convert stored energy into input power.
struct PumpCavityParams {
    double omega_p{};   // pump angular frequency, rad/s
    double q_factor{};  // pump-cavity quality factor
};

/// Plate velocity prescribed directly at the second harmonic of the signal.
/// phase = 0 is the synchronous phase: v = v_2w * cos(2*omega*t) against a
/// capacitor field E = E0 * cos(omega*t).
struct KinematicVelocity {
    double v_2w{};   // velocity amplitude at 2*omega, m/s
    double phase{};  // rad
};

/// Pump field at the first harmonic (omega_p = omega); the quadratic pressure
/// supplies the second-harmonic plate drive.
struct NoBiasField {
    double e_p{};      // pump field amplitude, V/m
    double omega_p{};  // rad/s
};

/// DC bias superposed on a second-harmonic pump field (omega_p = 2*omega);
/// the cross term drives the plate at omega_p itself.
struct DcBiasField {
    double e_dc{};     // DC bias field, V/m
    double e_p{};      // pump field amplitude, V/m
    double omega_p{};  // rad/s
};

using PumpDrive = std::variant<KinematicVelocity, NoBiasField, DcBiasField>;

/// Instantaneous circuit and plate state.
/// Positive plate_x widens the gap (sweeps out new field volume).
struct LcState {
    double charge_q{};   // capacitor charge, C
    double current_i{};  // inductor current, A
    double plate_x{};    // plate displacement from equilibrium, m
    double plate_v{};    // plate velocity, m/s
    double time_t{};     // s
};

}  // namespace paramp
