// Acceptance suite: runs every verification criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "paramp/circuit.hpp"
#include "paramp/constants.hpp"
#include "paramp/growth.hpp"
#include "paramp/pump.hpp"
#include "paramp/thresholds.hpp"

using namespace paramp;
using namespace paramp::cli;

namespace {

constexpr double k_pi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

double rel_err(double got, double want) {
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

CavityParams paper_cavity() {
    return CavityParams{2e-6, k_c / 1e10, 1e-2, 2.0 * k_pi * 1e10, 1e10};
}

CavityParams desk_cavity(double q_factor) {
    return CavityParams{2e-6, 1e-3, 1e-4, 2.0 * k_pi * 1e6, q_factor};
}

SimConfig seeded_config(int n_cycles, int record_stride) {
    SimConfig cfg;
    cfg.n_cycles = n_cycles;
    cfg.initial_charge_c = 1e-15;
    cfg.record_stride = record_stride;
    return cfg;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double xm = 0.0, ym = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        xm += x[k];
        ym += y[k];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - xm) * (x[k] - xm);
        sxy += (x[k] - xm) * (y[k] - ym);
    }
    return sxy / sxx;
}

// 1. Golden number: the no-bias threshold power of the reference design is
//    3.57 uW, within 5% of 3.6 microwatts.
Outcome criterion_golden_power() {
    const CavityParams cav = paper_cavity();
    const PumpCavityParams pump{cav.omega, cav.q_factor};
    const double p = threshold_power_no_bias(cav, pump);
    const double err = rel_err(p, 3.6e-6);
    return {err < 0.05 && rel_err(p, 3.57e-6) < 1e-3,
            "P = " + sci(p) + " W, rel err vs 3.6e-6 W = " + sci(err)};
}

// 2. Braginsky equivalence under L = 4 d0, Q_i = Q_s = Q, 1000 random cavities.
Outcome criterion_braginsky() {
    std::mt19937 rng(40);
    std::uniform_real_distribution<double> log_m(-8.0, -3.0), log_w(3.0, 11.0),
        log_d(-4.0, -1.0), log_q(0.0, 11.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        CavityParams c;
        c.mass_kg = std::pow(10.0, log_m(rng));
        c.omega = std::pow(10.0, log_w(rng));
        c.gap_m = std::pow(10.0, log_d(rng));
        c.area_m2 = 1e-2;
        c.q_factor = 1.0 + std::pow(10.0, log_q(rng));
        const double u = threshold_energy(c).total_j;
        const double b = braginsky_threshold(c.mass_kg, c.omega, 4.0 * c.gap_m,
                                             c.q_factor, c.q_factor);
        worst = std::max(worst, rel_err(u, b));
    }
    return {worst < 1e-12, "worst rel diff over 1000 cavities = " + sci(worst)};
}

// 3. Walls-Milburn consistency: rough/WM = 2 pi, exact ratio = 4 x rough.
Outcome criterion_walls_milburn() {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> log_q(0.0, 12.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double q = std::pow(10.0, log_q(rng));
        worst = std::max(worst,
                         rel_err(rough_velocity_ratio(q) /
                                     walls_milburn_velocity_ratio(q),
                                 2.0 * k_pi));
        const double omega = 2.0 * k_pi * 1e9;
        const double d0 = 2.0 * k_pi * k_c / omega;  // d0 omega = 2 pi c
        const double exact_vc = threshold_velocity(omega, d0, q) / k_c;
        worst = std::max(worst, rel_err(exact_vc, 4.0 * rough_velocity_ratio(q)));
    }
    return {worst < 1e-12, "worst rel diff = " + sci(worst)};
}

// 4. Cube law: log-log slope of threshold power vs Q is exactly -3, for the
//    no-bias and DC-bias chains.
Outcome criterion_cube_law() {
    DesignConfig no_bias;
    no_bias.cavity = paper_cavity();
    no_bias.pump = {no_bias.cavity.omega, no_bias.cavity.q_factor};
    const SweepTable t1 = run_sweep(no_bias, SweepSpec{"Q", 1e8, 1e12, 5, true}, 0);
    std::vector<double> lq, lp;
    for (const auto& row : t1.rows) {
        lq.push_back(std::log(row[0]));
        lp.push_back(std::log(row[7]));  // P_threshold_no_bias_W
    }
    const double slope_nb = fit_slope(lq, lp);

    DesignConfig dc;
    dc.cavity = CavityParams{2e-6, k_pi * k_c / (2.0 * k_pi * 2e10), 1e-2,
                             2.0 * k_pi * 1e10, 1e10};
    dc.pump = {2.0 * dc.cavity.omega, dc.cavity.q_factor};
    dc.drive = DcBiasField{1e6, 1e4, 2.0 * dc.cavity.omega};
    const SweepTable t2 = run_sweep(dc, SweepSpec{"Q", 1e8, 1e12, 5, true}, 0);
    lq.clear();
    lp.clear();
    for (const auto& row : t2.rows) {
        lq.push_back(std::log(row[0]));
        lp.push_back(std::log(row[12]));  // dc_P_threshold_W
    }
    const double slope_dc = fit_slope(lq, lp);

    const bool pass =
        std::abs(slope_nb + 3.0) < 1e-12 && std::abs(slope_dc + 3.0) < 1e-12;
    return {pass, "no-bias slope = " + sci(slope_nb) +
                      ", dc-bias slope = " + sci(slope_dc)};
}

// 5. Time-average identity over 100 drive periods.
Outcome criterion_time_average() {
    const TimeAverageReport rep =
        verify_time_averages(1e5, 0.3, 1e-3, 2.0 * k_pi * 1e9, 100);
    const double cos2_err = std::abs(rep.cos2_mean - 0.5);
    const bool pass = rep.rel_diff < 1e-9 && cos2_err < 1e-12;
    return {pass, "power rel diff = " + sci(rep.rel_diff) +
                      ", |<cos^2> - 1/2| = " + sci(cos2_err)};
}

// 6. Charge-integration oracle vs eps0 E^2 / 2 for 100 random fields.
Outcome criterion_footnote_oracle() {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> log_e(0.0, 8.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double e = std::pow(10.0, log_e(rng));
        worst = std::max(worst, rel_err(pressure_via_charge_integration(e, 100),
                                        pressure_on_plate(e)));
    }
    return {worst < 1e-12, "worst rel diff over 100 fields = " + sci(worst)};
}

// 7. Ring-down: fitted decay rate of the undriven lossy circuit vs omega/Q.
Outcome criterion_ring_down() {
    const LcCircuit c = build_circuit(desk_cavity(1e3), false);
    const double gamma = c.cavity.omega / c.cavity.q_factor;
    const Trace tr = simulate(c, KinematicVelocity{0.0, 0.0}, seeded_config(200, 5));
    const double rate = estimate_growth_rate(tr).rate;
    const double err = rel_err(rate, -gamma);
    return {err < 0.01,
            "fitted rate = " + sci(rate) + " 1/s vs -gamma = " + sci(-gamma) +
                ", rel err = " + sci(err)};
}

// 8. Parametric gain oracle: rate(2 v_th) = +gamma, rate(v_th/2) = -gamma/2,
//    both within 10%.
Outcome criterion_gain_oracle() {
    const LcCircuit c = build_circuit(desk_cavity(1e3), false);
    const double gamma = c.cavity.omega / c.cavity.q_factor;
    const double v_th = 4.0 * c.cavity.omega * c.cavity.gap_m / c.cavity.q_factor;

    const double rate_above =
        estimate_growth_rate(
            simulate(c, KinematicVelocity{2.0 * v_th, 0.0}, seeded_config(200, 10)))
            .rate;
    const double rate_below =
        estimate_growth_rate(
            simulate(c, KinematicVelocity{0.5 * v_th, 0.0}, seeded_config(200, 10)))
            .rate;
    const double err_above = rel_err(rate_above, gamma);
    const double err_below = rel_err(rate_below, -0.5 * gamma);
    const bool pass = err_above < 0.10 && rate_below < 0.0 && err_below < 0.10;
    return {pass, "rate(2 v_th) = " + sci(rate_above) + " (err " + sci(err_above) +
                      "), rate(v_th/2) = " + sci(rate_below) + " (err " +
                      sci(err_below) + ")"};
}

// 9. Numeric threshold by bisection for Q = 1e3 and 1e4, within 5%.
Outcome criterion_numeric_threshold() {
    std::string detail;
    bool pass = true;
    for (double q : {1e3, 1e4}) {
        const LcCircuit c = build_circuit(desk_cavity(q), false);
        SimConfig cfg = seeded_config(
            q > 5e3 ? 2400 : 240, 20);
        const double v_num = find_threshold_velocity_numeric(c, cfg, 0.05);
        const double v_ana =
            threshold_velocity(c.cavity.omega, c.cavity.gap_m, c.cavity.q_factor);
        const double err = rel_err(v_num, v_ana);
        pass = pass && err < 0.05;
        if (!detail.empty()) detail += "; ";
        detail += "Q=" + sci(q) + ": numeric " + sci(v_num) + " vs analytic " +
                  sci(v_ana) + " (rel diff " + sci(err) + ")";
    }
    return {pass, detail};
}

// 10. Equipartition and conservation for the lossless undriven circuit.
Outcome criterion_equipartition() {
    const LcCircuit c = build_circuit(desk_cavity(1e3), true);
    const EquipartitionReport rep = verify_equipartition(c, seeded_config(10, 1));
    const bool pass = rep.rel_diff <= 1e-6 && rep.energy_drift_rel <= 1e-6;
    return {pass, "|<U_E>-<U_B>|/<U_E> = " + sci(rep.rel_diff) +
                      ", energy drift = " + sci(rep.energy_drift_rel)};
}

// 11. DC-bias verdict: the power ratio exceeds 1e10 and the raw chain agrees
//     with the simplified half-wavelength form to 1e-12.
Outcome criterion_dc_bias_verdict() {
    const double omega_p = 2.0 * k_pi * 2e10;
    const CavityParams cav{2e-6, k_pi * k_c / omega_p, 1e-2, omega_p / 2.0, 1e10};
    const PumpCavityParams pump{omega_p, 1e10};
    const double e_dc = 1e6;

    const double ratio =
        dc_bias_power_ratio(cav.mass_kg, e_dc, cav.area_m2 * cav.gap_m);
    const double p_raw = dc_bias_threshold_power(cav, pump, e_dc);
    const double p_simplified = std::pow(k_pi, 3) * cav.mass_kg * cav.mass_kg *
                                omega_p * omega_p * std::pow(k_c, 3) /
                                (k_epsilon0 * e_dc * e_dc * cav.area_m2 *
                                 std::pow(cav.q_factor, 3));
    const double agree = rel_err(p_raw, p_simplified);
    const bool pass = ratio > 1e10 && agree < 1e-12;
    return {pass, "power ratio = " + sci(ratio) + ", raw-vs-simplified rel diff = " +
                      sci(agree)};
}

// 12. Phase scan: the synchronous drive phase maximizes the fitted growth
//     rate; a quarter-signal-period shift (the deamplified quadrature)
//     minimizes it.
Outcome criterion_phase_scan() {
    const LcCircuit c = build_circuit(desk_cavity(1e3), false);
    const double v_th = 4.0 * c.cavity.omega * c.cavity.gap_m / c.cavity.q_factor;
    std::vector<double> rates;
    for (int k = 0; k < 8; ++k) {
        const double phase = 2.0 * k_pi * k / 8.0;
        rates.push_back(estimate_growth_rate(simulate(c,
                                                      KinematicVelocity{2.0 * v_th,
                                                                        phase},
                                                      seeded_config(150, 10)))
                            .rate);
    }
    size_t argmax = 0, argmin = 0;
    for (size_t k = 1; k < rates.size(); ++k) {
        if (rates[k] > rates[argmax]) argmax = k;
        if (rates[k] < rates[argmin]) argmin = k;
    }
    const bool pass = argmax == 0 && argmin == 4;
    return {pass, "max at phase index " + std::to_string(argmax) +
                      " (rate " + sci(rates[argmax]) + "), min at index " +
                      std::to_string(argmin) + " (rate " + sci(rates[argmin]) + ")"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1  golden threshold power (3.6 uW within 5%)", criterion_golden_power},
        {"2  Braginsky equivalence (1e-12, 1000 cavities)", criterion_braginsky},
        {"3  Walls-Milburn consistency (2 pi and factor 4, 1e-12)",
         criterion_walls_milburn},
        {"4  inverse-cube law in Q (slope -3 to 1e-12)", criterion_cube_law},
        {"5  time-average identity (1e-9; <cos^2> to 1e-12)",
         criterion_time_average},
        {"6  charge-integration pressure oracle (1e-12, 100 fields)",
         criterion_footnote_oracle},
        {"7  ring-down rate within 1% of omega/Q", criterion_ring_down},
        {"8  parametric gain rate within 10% of kappa - gamma",
         criterion_gain_oracle},
        {"9  numeric threshold within 5% for Q in {1e3, 1e4}",
         criterion_numeric_threshold},
        {"10 equipartition and conservation to 1e-6", criterion_equipartition},
        {"11 DC-bias verdict (ratio > 1e10; forms agree to 1e-12)",
         criterion_dc_bias_verdict},
        {"12 phase scan: synchronous max, quadrature min", criterion_phase_scan},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, "exception"};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] %s — %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL",
                    c.name, outcome.detail.c_str(), secs);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", std::size(criteria));
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
