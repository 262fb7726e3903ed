#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "paramp/circuit.hpp"
#include "paramp/types.hpp"

namespace paramp::cli {

struct SweepSpec {
    std::string axis;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    bool log_scale = false;
};

/// A full design as read from a JSON config file. Frequencies are accepted as
/// either omega_rad_per_s or f_Hz (exactly one) and held as omega internally.
struct DesignConfig {
    CavityParams cavity;
    PumpCavityParams pump;
    std::optional<PumpDrive> drive;
    std::optional<SimConfig> sim;
    bool lossless = false;
    std::optional<SweepSpec> sweep;
};

DesignConfig parse_config(const nlohmann::json& j);
DesignConfig load_config(const std::string& path);

}  // namespace paramp::cli
