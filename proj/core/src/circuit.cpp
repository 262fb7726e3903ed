#include "paramp/circuit.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "paramp/constants.hpp"
#include "paramp/errors.hpp"
#include "paramp/thresholds.hpp"
#include "paramp/validate.hpp"

namespace paramp {
namespace {

constexpr double k_pi = std::numbers::pi;

// Resolved drive: either a closed-form plate trajectory (kinematic) or a
// pump-field force law under which the plate moves as a free mass.
struct DriveModel {
    enum class Kind { kinematic, no_bias, dc_bias } kind;
    double phase = 0.0;
    // kinematic
    double x_p = 0.0;
    double v_2w = 0.0;
    double two_omega = 0.0;
    // field modes
    double e_p = 0.0;
    double e_dc = 0.0;
    double omega_p = 0.0;

    [[nodiscard]] double plate_x(double t) const {
        return x_p * std::sin(two_omega * t + phase);
    }
    [[nodiscard]] double plate_v(double t) const {
        return v_2w * std::cos(two_omega * t + phase);
    }
    [[nodiscard]] double pump_field(double t) const {
        const double s = std::sin(omega_p * t + phase);
        return kind == Kind::no_bias ? e_p * s : e_dc - e_p * s;
    }
};

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

LcCircuit build_circuit(const CavityParams& cavity, bool lossless) {
    check_cavity(cavity);
    LcCircuit c;
    c.cavity = cavity;
    c.capacitance0_f = k_epsilon0 * cavity.area_m2 / cavity.gap_m;
    c.inductance_h = 1.0 / (cavity.omega * cavity.omega * c.capacitance0_f);
    c.lossless = lossless;
    c.resistance_ohm =
        lossless ? 0.0 : cavity.omega * c.inductance_h / cavity.q_factor;
    return c;
}

Trace simulate(const LcCircuit& circuit, const PumpDrive& drive,
               const SimConfig& cfg) {
    const CavityParams& cav = circuit.cavity;
    if (cfg.steps_per_cycle < 100)
        throw ConfigError("steps_per_cycle must be >= 100");
    if (cfg.n_cycles < 1) throw ConfigError("n_cycles must be >= 1");
    if (cfg.record_stride < 1) throw ConfigError("record_stride must be >= 1");

    Validated checked = validate(cav, drive);
    std::optional<std::string> warning = checked.warning;

    DriveModel model{};
    if (const auto* kin = std::get_if<KinematicVelocity>(&drive)) {
        model.kind = DriveModel::Kind::kinematic;
        model.v_2w = kin->v_2w;
        model.two_omega = 2.0 * cav.omega;
        model.x_p = kin->v_2w / model.two_omega;
        model.phase = kin->phase + cfg.drive_phase;
        if (!(model.x_p < 0.5 * cav.gap_m))
            throw ConfigError(
                "kinematic drive amplitude x_p = v_2w/(2 omega) must stay below gap/2");
        if (model.x_p > 0.05 * cav.gap_m)
            warning = "modulation depth x_p/d0 > 0.05: first-order analysis is marginal";
    } else if (const auto* nb = std::get_if<NoBiasField>(&drive)) {
        model.kind = DriveModel::Kind::no_bias;
        model.e_p = nb->e_p;
        model.omega_p = nb->omega_p;
        model.phase = cfg.drive_phase;
    } else {
        const auto& dc = std::get<DcBiasField>(drive);
        model.kind = DriveModel::Kind::dc_bias;
        model.e_p = dc.e_p;
        model.e_dc = dc.e_dc;
        model.omega_p = dc.omega_p;
        model.phase = cfg.drive_phase;
    }
    const bool forced = model.kind != DriveModel::Kind::kinematic;

    const double eps_a = k_epsilon0 * cav.area_m2;
    const double d0 = cav.gap_m;
    const double inv_l = 1.0 / circuit.inductance_h;
    const double r = circuit.resistance_ohm;
    const double inv_m = 1.0 / cav.mass_kg;

    const double period = 2.0 * k_pi / cav.omega;
    const double dt = period / cfg.steps_per_cycle;
    const long total_steps = static_cast<long>(cfg.n_cycles) * cfg.steps_per_cycle;

    // State: q, i, x, v, W_in, Q_diss. The x/v slots are unused in kinematic
    // mode, where the trajectory is evaluated in closed form.
    std::array<double, 6> y{cfg.initial_charge_c, cfg.initial_current_a,
                            0.0, 0.0, 0.0, 0.0};

    auto deriv = [&](double t, const std::array<double, 6>& s,
                     std::array<double, 6>& ds) {
        const double x = forced ? s[2] : model.plate_x(t);
        const double v = forced ? s[3] : model.plate_v(t);
        const double gap = d0 + x;
        const double e_cap = s[0] / eps_a;
        ds[0] = s[1];
        ds[1] = (-s[0] * gap / eps_a - r * s[1]) * inv_l;
        if (forced) {
            ds[2] = s[3];
            ds[3] = pressure_on_plate(model.pump_field(t)) * cav.area_m2 * inv_m;
        } else {
            ds[2] = 0.0;
            ds[3] = 0.0;
        }
        ds[4] = 0.5 * k_epsilon0 * e_cap * e_cap * cav.area_m2 * v;
        ds[5] = r * s[1] * s[1];
    };

    Trace trace;
    trace.dt = dt;
    trace.meta = TraceMeta{circuit, drive, cfg, warning};
    trace.samples.reserve(static_cast<size_t>(total_steps / cfg.record_stride) + 2);

    auto record = [&](double t) {
        const double x = forced ? y[2] : model.plate_x(t);
        const double v = forced ? y[3] : model.plate_v(t);
        TraceSample s;
        s.state = LcState{y[0], y[1], x, v, t};
        s.u_e_j = y[0] * y[0] * (d0 + x) / (2.0 * eps_a);
        s.u_b_j = 0.5 * circuit.inductance_h * y[1] * y[1];
        s.w_in_j = y[4];
        s.q_diss_j = y[5];
        trace.samples.push_back(s);
    };

    record(0.0);
    std::array<double, 6> k1, k2, k3, k4, tmp;
    for (long n = 0; n < total_steps; ++n) {
        const double t = static_cast<double>(n) * dt;
        deriv(t, y, k1);
        for (int j = 0; j < 6; ++j) tmp[j] = y[j] + 0.5 * dt * k1[j];
        deriv(t + 0.5 * dt, tmp, k2);
        for (int j = 0; j < 6; ++j) tmp[j] = y[j] + 0.5 * dt * k2[j];
        deriv(t + 0.5 * dt, tmp, k3);
        for (int j = 0; j < 6; ++j) tmp[j] = y[j] + dt * k3[j];
        deriv(t + dt, tmp, k4);
        for (int j = 0; j < 6; ++j)
            y[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

        const double t_next = static_cast<double>(n + 1) * dt;
        const double x_now = forced ? y[2] : model.plate_x(t_next);
        if (d0 + x_now <= 0.0) throw GapClosure(t_next);
        if ((n + 1) % cfg.record_stride == 0) record(t_next);
    }
    return trace;
}

TimeAverageReport verify_time_averages(double signal_e0, double v_2w,
                                       double area_m2, double omega,
                                       int n_periods) {
    if (n_periods < 1) throw ConfigError("n_periods must be >= 1");
    if (!(omega > 0.0)) throw NonPositiveParameter("omega");
    if (!(area_m2 > 0.0)) throw NonPositiveParameter("area_m2");
    if (signal_e0 < 0.0) throw NonPositiveParameter("signal_e0", "must be >= 0");
    if (v_2w < 0.0) throw NonPositiveParameter("v_2w", "must be >= 0");

    const double t2 = k_pi / omega;  // period of the 2*omega drive
    constexpr int k_samples_per_period = 512;
    const long n = static_cast<long>(k_samples_per_period) * n_periods;
    const double dt = t2 / k_samples_per_period;

    KahanSum power_terms, cos2_terms, ue_terms;
    for (long k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double c2 = std::cos(2.0 * omega * t);
        power_terms.add(c2 + c2 * c2);
        cos2_terms.add(c2 * c2);
        const double ce = std::cos(omega * t);
        ue_terms.add(ce * ce);
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    const double prefactor =
        0.25 * k_epsilon0 * signal_e0 * signal_e0 * area_m2 * v_2w;

    TimeAverageReport rep{};
    rep.numeric_mean_w = prefactor * power_terms.sum * inv_n;
    rep.analytic_mean_w =
        0.125 * k_epsilon0 * signal_e0 * signal_e0 * area_m2 * v_2w;
    rep.rel_diff = rep.analytic_mean_w != 0.0
                       ? std::abs(rep.numeric_mean_w - rep.analytic_mean_w) /
                             rep.analytic_mean_w
                       : std::abs(rep.numeric_mean_w);
    rep.cos2_mean = cos2_terms.sum * inv_n;
    rep.u_e_mean =
        0.5 * k_epsilon0 * signal_e0 * signal_e0 * (ue_terms.sum * inv_n);
    rep.u_e_expected = 0.25 * k_epsilon0 * signal_e0 * signal_e0;
    return rep;
}

EquipartitionReport verify_equipartition(const LcCircuit& circuit,
                                         const SimConfig& cfg) {
    if (!circuit.lossless || circuit.resistance_ohm != 0.0)
        throw ConfigError("equipartition check requires a lossless circuit");
    if (cfg.initial_charge_c == 0.0)
        throw ConfigError("equipartition check requires a nonzero charge seed");
    if (cfg.n_cycles < 10) throw ConfigError("need at least 10 cycles");

    const Trace tr = simulate(circuit, KinematicVelocity{0.0, 0.0}, cfg);
    const auto& s = tr.samples;

    // Trapezoid averages over the recorded (integer-cycle) span.
    KahanSum ue, ub;
    for (size_t k = 0; k + 1 < s.size(); ++k) {
        ue.add(0.5 * (s[k].u_e_j + s[k + 1].u_e_j));
        ub.add(0.5 * (s[k].u_b_j + s[k + 1].u_b_j));
    }
    const double inv_n = 1.0 / static_cast<double>(s.size() - 1);

    EquipartitionReport rep{};
    rep.u_e_mean_j = ue.sum * inv_n;
    rep.u_b_mean_j = ub.sum * inv_n;
    rep.rel_diff = std::abs(rep.u_e_mean_j - rep.u_b_mean_j) / rep.u_e_mean_j;
    const double total0 = s.front().u_e_j + s.front().u_b_j;
    double drift = 0.0;
    for (const auto& smp : s)
        drift = std::max(drift, std::abs(smp.u_e_j + smp.u_b_j - total0));
    rep.energy_drift_rel = drift / total0;
    return rep;
}

}  // namespace paramp
