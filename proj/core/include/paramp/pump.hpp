#pragma once

#include <optional>
#include <string>

#include "paramp/types.hpp"

namespace paramp {

/// Plate motion amplitudes induced by a pump field.
struct DriveResponse {
    double x_p;           // displacement amplitude, m
    double v_p;           // velocity amplitude, m/s
    double drive_omega;   // angular frequency of the plate motion, rad/s
    std::optional<std::string> validity_warning;
};

/// Plate response to an unbiased pump E = e_p sin(omega_p t). The quadratic
/// pressure drives the free plate at 2*omega_p with
/// x_p = eps0 e_p^2 A / (16 m omega_p^2), v_p = 2 omega_p x_p.
DriveResponse no_bias_response(double e_p, double omega_p, double mass_kg,
                               double area_m2);

/// Plate response to a DC-biased pump E = e_dc - e_p sin(omega_p t) in the
/// strong-bias regime e_dc >> e_p. The cross term drives the plate at omega_p
/// with x_p = eps0 e_dc e_p A / (m omega_p^2), v_p = omega_p x_p.
/// Throws BiasRegimeViolation when e_dc <= e_p; warns when e_dc/e_p < 10.
DriveResponse dc_bias_response(double e_dc, double e_p, double omega_p,
                               double mass_kg, double area_m2);

/// Pump field amplitude that puts the DC-biased drive exactly at threshold:
/// e_p = 2 m omega_p^2 d0 / (eps0 e_dc A Q_s). Requires omega_p = 2*omega.
double dc_bias_threshold_field(const CavityParams& cavity, double e_dc,
                               double omega_p);

/// Threshold pump power with DC bias,
/// P = m^2 omega_p^5 d0^3 / (eps0 e_dc^2 A Q_s^2 Q_p), computed as the stored
/// threshold pump energy (eps0 e_p,th^2 A d0 / 4, electric plus magnetic
/// halves of the time-averaged density) converted through omega_p/Q_p.
/// Requires pump.omega_p = 2*cavity.omega.
double dc_bias_threshold_power(const CavityParams& cavity,
                               const PumpCavityParams& pump, double e_dc);

/// Ratio of the DC-bias threshold power to the no-bias one,
/// (pi^2/32) m c^2 / (eps0 e_dc^2 V0). Values >> 1 are why the DC-bias route
/// is rejected: the plate rest-mass energy dwarfs the bias field energy.
double dc_bias_power_ratio(double mass_kg, double e_dc, double volume_m3);

/// Plate pressure obtained by trapezoid integration of the incremental
/// Coulomb force dF = eps0 A E' dE' from 0 to e_final (the area cancels in
/// F/A). Independent oracle for pressure_on_plate; the trapezoid rule is
/// exact for the linear integrand.
double pressure_via_charge_integration(double e_final, int n_steps);

}  // namespace paramp
