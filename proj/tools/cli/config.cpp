#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "paramp/constants.hpp"
#include "paramp/errors.hpp"

namespace paramp::cli {
namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key,
                      const std::string& where) {
    if (!j.contains(key))
        throw ConfigError(where + ": missing required field '" + key + "'");
    if (!j.at(key).is_number())
        throw ConfigError(where + ": field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

double optional_number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw ConfigError("field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

// Exactly one of omega_rad_per_s / f_Hz, converted to rad/s.
double parse_omega(const json& j, const std::string& where) {
    const bool has_omega = j.contains("omega_rad_per_s");
    const bool has_f = j.contains("f_Hz");
    if (has_omega == has_f)
        throw ConfigError(where +
                          ": give exactly one of 'omega_rad_per_s' or 'f_Hz'");
    if (has_omega) return require_number(j, "omega_rad_per_s", where);
    return 2.0 * std::numbers::pi * require_number(j, "f_Hz", where);
}

CavityParams parse_cavity(const json& j) {
    if (!j.is_object()) throw ConfigError("'cavity' must be an object");
    CavityParams cav;
    cav.mass_kg = require_number(j, "mass_kg", "cavity");
    cav.gap_m = require_number(j, "gap_m", "cavity");
    cav.area_m2 = require_number(j, "area_m2", "cavity");
    cav.omega = parse_omega(j, "cavity");
    cav.q_factor = require_number(j, "Q", "cavity");
    return cav;
}

PumpCavityParams parse_pump(const json& j) {
    if (!j.is_object()) throw ConfigError("'pump' must be an object");
    PumpCavityParams pump;
    pump.omega_p = parse_omega(j, "pump");
    pump.q_factor = require_number(j, "Q", "pump");
    return pump;
}

PumpDrive parse_drive(const json& j) {
    if (!j.is_object()) throw ConfigError("'drive' must be an object");
    if (!j.contains("type") || !j.at("type").is_string())
        throw ConfigError("drive: missing 'type' (kinematic | no_bias | dc_bias)");
    const std::string type = j.at("type").get<std::string>();
    if (type == "kinematic") {
        KinematicVelocity kin;
        kin.v_2w = require_number(j, "v_2w_m_per_s", "drive");
        kin.phase = optional_number(j, "phase_rad", 0.0);
        return kin;
    }
    if (type == "no_bias") {
        NoBiasField nb;
        nb.e_p = require_number(j, "E_p_V_per_m", "drive");
        nb.omega_p = parse_omega(j, "drive");
        return nb;
    }
    if (type == "dc_bias") {
        DcBiasField dc;
        dc.e_dc = require_number(j, "E_dc_V_per_m", "drive");
        dc.e_p = require_number(j, "E_p_V_per_m", "drive");
        dc.omega_p = parse_omega(j, "drive");
        return dc;
    }
    throw ConfigError("drive: unknown type '" + type + "'");
}

SimConfig parse_sim(const json& j, const CavityParams& cavity) {
    if (!j.is_object()) throw ConfigError("'sim' must be an object");
    SimConfig sim;
    sim.steps_per_cycle =
        static_cast<int>(optional_number(j, "steps_per_cycle", 500.0));
    sim.n_cycles = static_cast<int>(require_number(j, "n_cycles", "sim"));
    const bool has_q0 = j.contains("q0_C");
    const bool has_seed = j.contains("seed_voltage_V");
    if (has_q0 == has_seed)
        throw ConfigError("sim: give exactly one of 'q0_C' or 'seed_voltage_V'");
    if (has_q0) {
        sim.initial_charge_c = require_number(j, "q0_C", "sim");
    } else {
        const double c0 = k_epsilon0 * cavity.area_m2 / cavity.gap_m;
        sim.initial_charge_c = c0 * require_number(j, "seed_voltage_V", "sim");
    }
    sim.initial_current_a = optional_number(j, "i0_A", 0.0);
    sim.drive_phase = optional_number(j, "drive_phase_rad", 0.0);
    sim.record_stride = static_cast<int>(optional_number(j, "record_stride", 1.0));
    return sim;
}

SweepSpec parse_sweep(const json& j) {
    if (!j.is_object()) throw ConfigError("'sweep' must be an object");
    SweepSpec spec;
    if (!j.contains("axis") || !j.at("axis").is_string())
        throw ConfigError("sweep: missing 'axis'");
    spec.axis = j.at("axis").get<std::string>();
    spec.min = require_number(j, "min", "sweep");
    spec.max = require_number(j, "max", "sweep");
    spec.points = static_cast<int>(require_number(j, "points", "sweep"));
    if (j.contains("scale")) {
        const std::string scale = j.at("scale").get<std::string>();
        if (scale == "log")
            spec.log_scale = true;
        else if (scale != "linear")
            throw ConfigError("sweep: 'scale' must be 'linear' or 'log'");
    }
    return spec;
}

}  // namespace

DesignConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    if (!j.contains("cavity")) throw ConfigError("config: missing 'cavity'");
    if (!j.contains("pump")) throw ConfigError("config: missing 'pump'");

    DesignConfig cfg;
    cfg.cavity = parse_cavity(j.at("cavity"));
    cfg.pump = parse_pump(j.at("pump"));
    if (j.contains("drive")) cfg.drive = parse_drive(j.at("drive"));
    if (j.contains("sim")) {
        const auto& sim = j.at("sim");
        cfg.sim = parse_sim(sim, cfg.cavity);
        if (sim.contains("lossless")) {
            if (!sim.at("lossless").is_boolean())
                throw ConfigError("sim: 'lossless' must be a boolean");
            cfg.lossless = sim.at("lossless").get<bool>();
        }
    }
    if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"));
    return cfg;
}

DesignConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_config(j);
}

}  // namespace paramp::cli
