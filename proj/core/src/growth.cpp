#include "paramp/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "paramp/errors.hpp"
#include "paramp/thresholds.hpp"

namespace paramp {
namespace {

struct CycleMax {
    double t;
    double energy;
};

}  // namespace

GrowthEstimate estimate_growth_rate(const Trace& trace) {
    const double omega = trace.meta.circuit.cavity.omega;
    const double period = 2.0 * std::numbers::pi / omega;
    const auto& samples = trace.samples;
    if (samples.empty()) throw DegenerateTrace("empty trace");

    const double span = samples.back().state.time_t;
    const int n_cycles = static_cast<int>(std::floor(span / period + 1e-9));
    if (n_cycles < 20) throw ConfigError("trace must span at least 20 cycles");

    std::vector<CycleMax> maxima(static_cast<size_t>(n_cycles),
                                 CycleMax{0.0, -1.0});
    bool any_usable = false;
    for (const auto& s : samples) {
        int idx = static_cast<int>(s.state.time_t / period);
        idx = std::min(idx, n_cycles - 1);
        const double e = s.u_e_j + s.u_b_j;
        if (!std::isfinite(e) || e < 1e-300) continue;
        any_usable = true;
        if (e > maxima[static_cast<size_t>(idx)].energy)
            maxima[static_cast<size_t>(idx)] = CycleMax{s.state.time_t, e};
    }
    if (!any_usable)
        throw DegenerateTrace("all sampled energies below 1e-300 or non-finite");

    // Trailing 80% of the cycles, skipping any cycle without a usable maximum.
    const int first = n_cycles / 5;
    std::vector<CycleMax> window;
    window.reserve(static_cast<size_t>(n_cycles - first));
    for (int k = first; k < n_cycles; ++k)
        if (maxima[static_cast<size_t>(k)].energy > 0.0)
            window.push_back(maxima[static_cast<size_t>(k)]);
    if (window.size() < 2)
        throw DegenerateTrace("fewer than two usable cycle maxima in the fit window");

    // Least squares on (t, log E).
    const double n = static_cast<double>(window.size());
    double st = 0.0, sy = 0.0;
    for (const auto& m : window) {
        st += m.t;
        sy += std::log(m.energy);
    }
    const double t_mean = st / n;
    const double y_mean = sy / n;
    double stt = 0.0, sty = 0.0, syy = 0.0;
    for (const auto& m : window) {
        const double dt = m.t - t_mean;
        const double dy = std::log(m.energy) - y_mean;
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    const double slope = sty / stt;

    double r2 = 1.0;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (const auto& m : window) {
            const double resid =
                (std::log(m.energy) - y_mean) - slope * (m.t - t_mean);
            ss_res += resid * resid;
        }
        r2 = 1.0 - ss_res / syy;
    }
    r2 = std::clamp(r2, 0.0, 1.0);

    return GrowthEstimate{slope, r2, static_cast<int>(window.size()),
                          "log_linear_cycle_max"};
}

double find_threshold_velocity_numeric(const LcCircuit& circuit,
                                       const SimConfig& cfg, double tol_rel) {
    if (!(tol_rel >= 1e-4 && tol_rel <= 0.2))
        throw ConfigError("tol_rel must lie in [1e-4, 0.2]");
    const CavityParams& cav = circuit.cavity;

    auto rate_at = [&](double v) {
        return estimate_growth_rate(
                   simulate(circuit, KinematicVelocity{v, 0.0}, cfg))
            .rate;
    };

    const double v_analytic = threshold_velocity(cav.omega, cav.gap_m, cav.q_factor);
    const double hi0 = 10.0 * v_analytic;
    // Distinguishes a genuine decay rate from fit noise on a flat envelope
    // (the lossless case, where no threshold exists).
    const double rate_floor = 1e-9 * cav.omega;

    const double f_lo = rate_at(0.0);
    const double f_hi = rate_at(hi0);
    if (!(f_lo < -rate_floor) || !(f_hi > rate_floor))
        throw NoSignChange(
            "fitted growth rate does not change sign over [0, 10 * 4 omega d0 / Q]");

    double lo = 0.0, hi = hi0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol_rel * mid) return mid;
        if (rate_at(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace paramp
