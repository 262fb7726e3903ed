#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramp/types.hpp"

namespace paramp {

/// Series LC circuit equivalent of the signal cavity, with the capacitor's
/// right plate free to move. Loss is a series resistance R = omega L / Q,
/// the minimal circuit realization of an energy decay rate gamma = omega/Q.
struct LcCircuit {
    CavityParams cavity{};
    double capacitance0_f{};  // C0 = eps0 A / d0 at the equilibrium gap
    double inductance_h{};    // L = 1 / (omega^2 C0)
    double resistance_ohm{};  // omega L / Q, or 0 when lossless
    bool lossless{};
};

LcCircuit build_circuit(const CavityParams& cavity, bool lossless);

struct SimConfig {
    int steps_per_cycle = 500;   // fixed-step RK4 substeps per signal period
    int n_cycles = 1;
    double initial_charge_c = 0.0;
    double initial_current_a = 0.0;
    double drive_phase = 0.0;    // added to the drive waveform argument
    int record_stride = 1;       // keep every record_stride-th step
};

struct TraceSample {
    LcState state;
    double u_e_j;     // q^2 (d0+x) / (2 eps0 A)
    double u_b_j;     // L i^2 / 2
    double w_in_j;    // cumulative work done by the plate motion on the fields
    double q_diss_j;  // cumulative resistive dissipation
};

struct TraceMeta {
    LcCircuit circuit;
    PumpDrive drive;
    SimConfig config;
    std::optional<std::string> warning;
};

struct Trace {
    std::vector<TraceSample> samples;
    double dt;
    TraceMeta meta;
};

/// Integrates the circuit with a classical fixed-step 4th-order scheme at
/// dt = T/steps_per_cycle. The plate either follows the prescribed kinematic
/// trajectory x = (v_2w/2 omega) sin(2 omega t + phase) or moves as a free
/// mass under the pump-field pressure (no-bias / DC-bias modes). The work and
/// dissipation ledgers are co-integrated with the state so the energy balance
/// closes to integrator accuracy. Deterministic: identical inputs give
/// bit-identical traces.
Trace simulate(const LcCircuit& circuit, const PumpDrive& drive,
               const SimConfig& cfg);

struct TimeAverageReport {
    double numeric_mean_w;   // quadrature mean of the instantaneous pump power
    double analytic_mean_w;  // eps0 e0^2 A v_2w / 8
    double rel_diff;
    double cos2_mean;        // should be 1/2 over integer drive periods
    double u_e_mean;         // quadrature mean of the stored energy density
    double u_e_expected;     // eps0 e0^2 / 4
};

/// Averages the instantaneous power (eps0 e0^2/4) A v_2w (cos 2wt + cos^2 2wt)
/// over n_periods integer periods of the 2*omega drive and compares with the
/// closed form. Also checks <cos^2 2wt> = 1/2 and <u_E> = eps0 e0^2/4.
TimeAverageReport verify_time_averages(double signal_e0, double v_2w,
                                       double area_m2, double omega,
                                       int n_periods);

struct EquipartitionReport {
    double u_e_mean_j;
    double u_b_mean_j;
    double rel_diff;          // |<U_E> - <U_B>| / <U_E>
    double energy_drift_rel;  // max |U_tot(t) - U_tot(0)| / U_tot(0)
};

/// Cycle-averaged capacitor vs inductor energy for an undriven lossless run.
/// Requires a lossless circuit, a nonzero charge seed and >= 10 cycles.
EquipartitionReport verify_equipartition(const LcCircuit& circuit,
                                         const SimConfig& cfg);

}  // namespace paramp
