#include "cli/commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "paramp/constants.hpp"
#include "paramp/errors.hpp"
#include "paramp/growth.hpp"
#include "paramp/pump.hpp"
#include "paramp/thresholds.hpp"
#include "paramp/validate.hpp"

namespace paramp::cli {
namespace {

using nlohmann::json;

json unit_value(double value, const char* unit) {
    return json{{"value", value}, {"unit", unit}};
}

void run_indexed(int n, int threads, const std::function<void(int)>& work) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) work(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += threads) work(i);
        });
    }
    for (auto& t : pool) t.join();
}

// DC-bias chain values for a report; requires the pump cavity at 2*omega.
struct DcBiasChain {
    double e_p_threshold;
    double p_threshold;
    double power_ratio;
};

DcBiasChain dc_bias_chain(const DesignConfig& cfg, const DcBiasField& dc) {
    DcBiasChain out{};
    out.e_p_threshold = dc_bias_threshold_field(cfg.cavity, dc.e_dc, dc.omega_p);
    out.p_threshold = dc_bias_threshold_power(cfg.cavity, cfg.pump, dc.e_dc);
    out.power_ratio = dc_bias_power_ratio(cfg.cavity.mass_kg, dc.e_dc,
                                          cfg.cavity.area_m2 * cfg.cavity.gap_m);
    return out;
}

SimConfig default_search_config(const CavityParams& cavity) {
    SimConfig cfg;
    cfg.steps_per_cycle = 500;
    cfg.n_cycles = std::max(240, static_cast<int>(std::lround(0.25 * cavity.q_factor)));
    const double c0 = k_epsilon0 * cavity.area_m2 / cavity.gap_m;
    cfg.initial_charge_c = c0 * 1e-3;  // 1 mV seed
    cfg.record_stride = std::max(1, cfg.steps_per_cycle / 25);
    return cfg;
}

int cmd_threshold(const DesignConfig& cfg, const std::string& json_out,
                  std::ostream& out) {
    const json report = threshold_json(cfg);
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) throw ConfigError("cannot open output file: " + json_out);
        f << report.dump(2) << '\n';
    } else {
        out << report.dump(2) << '\n';
    }
    return 0;
}

int cmd_simulate(const DesignConfig& cfg, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
    if (!cfg.sim)
        throw ConfigError("simulate requires a 'sim' section in the config");
    const LcCircuit circuit = build_circuit(cfg.cavity, cfg.lossless);
    const PumpDrive drive =
        cfg.drive ? *cfg.drive : PumpDrive{KinematicVelocity{0.0, 0.0}};
    const Trace trace = simulate(circuit, drive, *cfg.sim);
    if (trace.meta.warning) err << "warning: " << *trace.meta.warning << '\n';
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot open output file: " + out_path);
        write_trace_csv(trace, f);
    } else {
        write_trace_csv(trace, out);
    }
    return 0;
}

int cmd_find_threshold(const DesignConfig& cfg, double tol, std::ostream& out,
                       std::ostream& err) {
    if (cfg.cavity.q_factor > 1e5)
        err << "warning: Q > 1e5; the bisection runtime grows with Q\n";
    const FindThresholdResult result = find_threshold(cfg, tol);
    out << result.report.dump(2) << '\n';
    return 0;
}

int cmd_sweep(const DesignConfig& cfg, const SweepSpec& spec, int threads,
              const std::string& out_path, std::ostream& out) {
    const SweepTable table = run_sweep(cfg, spec, threads);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot open output file: " + out_path);
        write_sweep_csv(table, f);
    } else {
        write_sweep_csv(table, out);
    }
    return 0;
}

}  // namespace

std::string format_sci17(double value) {
    std::array<char, 40> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::scientific, 16);
    return std::string(buf.data(), res.ptr);
}

json threshold_json(const DesignConfig& cfg) {
    check_cavity(cfg.cavity);
    check_pump_cavity(cfg.pump);
    std::optional<std::string> warning;
    if (cfg.drive) warning = validate(cfg.cavity, *cfg.drive).warning;

    const ThresholdReport r = threshold_report(cfg.cavity, cfg.pump);
    json j;
    j["kappa_at_threshold"] = unit_value(r.kappa_at_threshold, "1/s");
    j["gamma"] = unit_value(r.gamma, "1/s");
    j["tau"] = unit_value(r.tau, "s");
    j["v_threshold"] = unit_value(r.v_threshold, "m/s");
    j["K_threshold"] = unit_value(r.k_threshold_j, "J");
    j["U_threshold"] = unit_value(r.u_threshold_j, "J");
    j["P_threshold_no_bias"] = unit_value(r.p_threshold_no_bias_w, "W");
    j["braginsky_U"] = unit_value(r.braginsky_u_j, "J");
    j["walls_milburn_vc"] = unit_value(r.walls_milburn_vc, "dimensionless");
    j["rough_vc"] = unit_value(r.rough_vc, "dimensionless");
    if (cfg.drive) {
        if (const auto* dc = std::get_if<DcBiasField>(&*cfg.drive)) {
            const DcBiasChain chain = dc_bias_chain(cfg, *dc);
            json d;
            d["E_p_threshold"] = unit_value(chain.e_p_threshold, "V/m");
            d["P_threshold"] = unit_value(chain.p_threshold, "W");
            d["ratio"] = unit_value(chain.power_ratio, "dimensionless");
            j["dc_bias"] = d;
        }
    }
    if (warning) j["warning"] = *warning;
    return j;
}

void write_trace_csv(const Trace& trace, std::ostream& os) {
    os << "t_s,q_C,i_A,x_m,v_m_per_s,U_E_J,U_B_J,W_in_J,Q_diss_J\n";
    for (const auto& s : trace.samples) {
        os << format_sci17(s.state.time_t) << ',' << format_sci17(s.state.charge_q)
           << ',' << format_sci17(s.state.current_i) << ','
           << format_sci17(s.state.plate_x) << ',' << format_sci17(s.state.plate_v)
           << ',' << format_sci17(s.u_e_j) << ',' << format_sci17(s.u_b_j) << ','
           << format_sci17(s.w_in_j) << ',' << format_sci17(s.q_diss_j) << '\n';
    }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (spec.points < 2) throw ConfigError("sweep needs at least 2 points");
    if (!(spec.min < spec.max))
        throw ConfigError("sweep requires min < max");
    if (spec.log_scale && !(spec.min > 0.0))
        throw ConfigError("log sweep requires min > 0");
    std::vector<double> grid(static_cast<size_t>(spec.points));
    for (int k = 0; k < spec.points; ++k) {
        const double f = static_cast<double>(k) / (spec.points - 1);
        grid[static_cast<size_t>(k)] =
            spec.log_scale
                ? std::exp(std::log(spec.min) +
                           f * (std::log(spec.max) - std::log(spec.min)))
                : spec.min + f * (spec.max - spec.min);
    }
    grid.front() = spec.min;
    grid.back() = spec.max;
    return grid;
}

DesignConfig with_axis_value(const DesignConfig& cfg, const std::string& axis,
                             double value) {
    DesignConfig out = cfg;
    if (axis == "Q") {
        out.cavity.q_factor = value;
        out.pump.q_factor = value;
    } else if (axis == "Q_s") {
        out.cavity.q_factor = value;
    } else if (axis == "Q_p") {
        out.pump.q_factor = value;
    } else if (axis == "m") {
        out.cavity.mass_kg = value;
    } else if (axis == "d0") {
        out.cavity.gap_m = value;
    } else if (axis == "A") {
        out.cavity.area_m2 = value;
    } else if (axis == "omega") {
        // Rescale every frequency proportionally so harmonic relations hold.
        const double factor = value / cfg.cavity.omega;
        out.cavity.omega = value;
        out.pump.omega_p = cfg.pump.omega_p * factor;
        if (out.drive) {
            if (auto* nb = std::get_if<NoBiasField>(&*out.drive))
                nb->omega_p *= factor;
            else if (auto* dc = std::get_if<DcBiasField>(&*out.drive))
                dc->omega_p *= factor;
        }
    } else if (axis == "E_dc") {
        if (!out.drive || !std::holds_alternative<DcBiasField>(*out.drive))
            throw ConfigError("axis 'E_dc' requires a dc_bias drive");
        std::get<DcBiasField>(*out.drive).e_dc = value;
    } else if (axis == "E_p") {
        if (out.drive && std::holds_alternative<NoBiasField>(*out.drive))
            std::get<NoBiasField>(*out.drive).e_p = value;
        else if (out.drive && std::holds_alternative<DcBiasField>(*out.drive))
            std::get<DcBiasField>(*out.drive).e_p = value;
        else
            throw ConfigError("axis 'E_p' requires a field drive");
    } else if (axis == "v_2w") {
        if (!out.drive || !std::holds_alternative<KinematicVelocity>(*out.drive))
            throw ConfigError("axis 'v_2w' requires a kinematic drive");
        std::get<KinematicVelocity>(*out.drive).v_2w = value;
    } else {
        throw ConfigError("unknown sweep axis: " + axis);
    }
    return out;
}

SweepTable run_sweep(const DesignConfig& cfg, const SweepSpec& spec, int threads) {
    const std::vector<double> grid = sweep_grid(spec);
    const bool with_dc =
        cfg.drive && std::holds_alternative<DcBiasField>(*cfg.drive);

    SweepTable table;
    table.columns = {spec.axis,
                     "kappa_at_threshold_1_per_s",
                     "gamma_1_per_s",
                     "tau_s",
                     "v_threshold_m_per_s",
                     "K_threshold_J",
                     "U_threshold_J",
                     "P_threshold_no_bias_W",
                     "braginsky_U_J",
                     "walls_milburn_vc",
                     "rough_vc"};
    if (with_dc) {
        table.columns.push_back("dc_E_p_threshold_V_per_m");
        table.columns.push_back("dc_P_threshold_W");
        table.columns.push_back("dc_power_ratio");
    }

    // Validate every grid point up front so a bad axis value fails before any
    // worker starts.
    std::vector<DesignConfig> points;
    points.reserve(grid.size());
    for (double v : grid) {
        DesignConfig p = with_axis_value(cfg, spec.axis, v);
        check_cavity(p.cavity);
        check_pump_cavity(p.pump);
        points.push_back(std::move(p));
    }

    table.rows.assign(grid.size(), {});
    run_indexed(static_cast<int>(grid.size()), threads, [&](int i) {
        const DesignConfig& p = points[static_cast<size_t>(i)];
        const ThresholdReport r = threshold_report(p.cavity, p.pump);
        std::vector<double> row = {grid[static_cast<size_t>(i)],
                                   r.kappa_at_threshold,
                                   r.gamma,
                                   r.tau,
                                   r.v_threshold,
                                   r.k_threshold_j,
                                   r.u_threshold_j,
                                   r.p_threshold_no_bias_w,
                                   r.braginsky_u_j,
                                   r.walls_milburn_vc,
                                   r.rough_vc};
        if (with_dc) {
            const DcBiasChain chain =
                dc_bias_chain(p, std::get<DcBiasField>(*p.drive));
            row.push_back(chain.e_p_threshold);
            row.push_back(chain.p_threshold);
            row.push_back(chain.power_ratio);
        }
        table.rows[static_cast<size_t>(i)] = std::move(row);
    });
    return table;
}

void write_sweep_csv(const SweepTable& table, std::ostream& os) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_sci17(row[c]);
        }
        os << '\n';
    }
}

FindThresholdResult find_threshold(const DesignConfig& cfg, double tol_rel) {
    const LcCircuit circuit = build_circuit(cfg.cavity, cfg.lossless);
    const SimConfig sim = cfg.sim ? *cfg.sim : default_search_config(cfg.cavity);

    const double v_numeric = find_threshold_velocity_numeric(circuit, sim, tol_rel);
    const double v_analytic =
        threshold_velocity(cfg.cavity.omega, cfg.cavity.gap_m, cfg.cavity.q_factor);
    const double rel_diff = std::abs(v_numeric - v_analytic) / v_analytic;

    json j;
    j["v_threshold_analytic"] = unit_value(v_analytic, "m/s");
    j["v_threshold_numeric"] = unit_value(v_numeric, "m/s");
    j["rel_diff"] = unit_value(rel_diff, "dimensionless");
    j["tol"] = unit_value(tol_rel, "dimensionless");
    j["cycles_simulated"] = unit_value(sim.n_cycles, "cycles");
    return FindThresholdResult{j, sim.n_cycles};
}

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const NoSignChange*>(&error)) return 4;
    if (dynamic_cast<const GapClosure*>(&error)) return 3;
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"energy-conservation analysis of a pellicle-mirror degenerate "
                 "parametric oscillator"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "max worker threads (default: available parallelism)");

    std::string config_path, json_out, csv_out;
    double tol = 0.05;
    SweepSpec sweep_flags;
    bool sweep_log = false;

    CLI::App* threshold = app.add_subcommand(
        "threshold", "closed-form threshold report as JSON");
    threshold->add_option("--config", config_path, "design JSON file")->required();
    threshold->add_option("--json-out", json_out, "write the report to a file");

    CLI::App* sim = app.add_subcommand(
        "simulate", "time-domain LC simulation, trace as CSV");
    sim->add_option("--config", config_path, "design JSON file")->required();
    sim->add_option("--out", csv_out, "trace CSV path (default: stdout)");

    CLI::App* find = app.add_subcommand(
        "find-threshold", "bisect the drive velocity for zero net growth");
    find->add_option("--config", config_path, "design JSON file")->required();
    find->add_option("--tol", tol, "relative bracket tolerance (default 0.05)");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "threshold report over a parameter grid, CSV");
    sweep->add_option("--config", config_path, "design JSON file")->required();
    sweep->add_option("--axis", sweep_flags.axis, "parameter to sweep");
    sweep->add_option("--min", sweep_flags.min, "axis minimum");
    sweep->add_option("--max", sweep_flags.max, "axis maximum");
    sweep->add_option("--points", sweep_flags.points, "grid size (>= 2)");
    sweep->add_flag("--log", sweep_log, "log-spaced grid");
    sweep->add_option("--out", csv_out, "sweep CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        const DesignConfig cfg = load_config(config_path);
        if (threshold->parsed()) return cmd_threshold(cfg, json_out, out);
        if (sim->parsed()) return cmd_simulate(cfg, csv_out, out, err);
        if (find->parsed()) return cmd_find_threshold(cfg, tol, out, err);
        if (sweep->parsed()) {
            SweepSpec spec;
            if (!sweep_flags.axis.empty()) {
                spec = sweep_flags;
                spec.log_scale = sweep_log;
            } else if (cfg.sweep) {
                spec = *cfg.sweep;
            } else {
                throw ConfigError(
                    "sweep needs --axis/--min/--max/--points or a config 'sweep' section");
            }
            return cmd_sweep(cfg, spec, threads, csv_out, out);
        }
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

}  // namespace paramp::cli
