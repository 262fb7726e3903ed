#pragma once

#include <string>

#include "paramp/circuit.hpp"

namespace paramp {

/// Fitted exponential rate of the stored-energy envelope.
struct GrowthEstimate {
    double rate;         // 1/s; positive = growth
    double r_squared;    // fit quality, in [0, 1]
    int window_cycles;   // cycles used by the fit
    std::string method;
};

/// Extracts the empirical exponent of the stored-energy envelope: takes
/// per-cycle maxima of U_E + U_B, then fits log(max) vs t by least squares
/// over the trailing 80% of the run. The leading 20% is discarded so the
/// transient in which the non-amplified quadrature dies out does not bias
/// the slope. The trace must span at least 20 cycles.
GrowthEstimate estimate_growth_rate(const Trace& trace);

/// Locates the oscillation threshold by bisecting the drive velocity over
/// [0, 10 * 4 omega d0 / Q] for the zero crossing of the fitted growth rate,
/// at the synchronous phase. Returns the bracket midpoint once the bracket is
/// narrower than tol_rel relative; tol_rel must lie in [1e-4, 0.2]. Throws
/// NoSignChange when the initial bracket does not straddle zero growth
/// (e.g. for a lossless circuit, where any nonzero drive grows).
double find_threshold_velocity_numeric(const LcCircuit& circuit,
                                       const SimConfig& cfg, double tol_rel);

}  // namespace paramp
