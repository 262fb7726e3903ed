#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "json.hpp"
#include "paramp/circuit.hpp"

namespace paramp::cli {

/// Scientific notation with 17 significant digits; locale-independent, so CSV
/// output is byte-reproducible.
std::string format_sci17(double value);

/// Analytic threshold report with a unit string on every value. Adds a
/// "dc_bias" sub-object when the configured drive is a DC-biased pump.
nlohmann::json threshold_json(const DesignConfig& cfg);

/// Column contract: t_s, q_C, i_A, x_m, v_m_per_s, U_E_J, U_B_J, W_in_J,
/// Q_diss_J; one header row; 17-significant-digit scientific notation.
void write_trace_csv(const Trace& trace, std::ostream& os);

std::vector<double> sweep_grid(const SweepSpec& spec);

/// Copy of the design with the named axis set to the given value. Axis names:
/// Q (both cavities), Q_s, Q_p, m, d0, A, omega (rescales all frequencies
/// proportionally), E_dc, E_p, v_2w.
DesignConfig with_axis_value(const DesignConfig& cfg, const std::string& axis,
                             double value);

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // ascending axis order
};

/// Evaluates the threshold report over the sweep grid, in parallel across
/// grid points; assembly is by index, so the output order is deterministic.
SweepTable run_sweep(const DesignConfig& cfg, const SweepSpec& spec, int threads);

void write_sweep_csv(const SweepTable& table, std::ostream& os);

struct FindThresholdResult {
    nlohmann::json report;
    int cycles_simulated;
};

/// Numeric-vs-analytic threshold comparison. Uses the config's sim section if
/// present, otherwise picks cycle counts that scale with Q.
FindThresholdResult find_threshold(const DesignConfig& cfg, double tol_rel);

/// 0 ok, 2 validation/config, 3 runtime physics failure, 4 search failure.
int exit_code_for(const std::exception& error);

/// Full command-line entry point (threshold, simulate, find-threshold, sweep).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace paramp::cli
