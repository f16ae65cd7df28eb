#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "portmd/backend/backend.hpp"
#include "portmd/core/types.hpp"
#include "portmd/simulation.hpp"

namespace portmd::bench {

/// One benchmark run. Field names double as the config-file keys.
struct BenchConfig {
    std::uint64_t n_particles = 2000;
    real density = real(0.8);
    real temperature = real(1.5);
    real dt = real(0.002);
    std::uint64_t steps = 5000;
    real r_cut = real(2.5);
    real skin = real(0.5);
    real thermostat_rate = 0;
    std::uint64_t seed = 1;
    ForceMode force_mode = ForceMode::all_to_all;
    BackendKind backend = BackendKind::sequential;
    unsigned worker_count = 1;
    bool deterministic = true;
    std::uint64_t sample_interval = 100;
    std::uint64_t equilibration_steps = 0;

    friend bool operator==(const BenchConfig&, const BenchConfig&) = default;
};

/// Config keys in field order.
const std::vector<std::string_view>& config_keys();

/// Parses flat `key = value` text; `#` starts a comment. Every key must
/// appear exactly once and unknown keys are rejected. Throws ConfigError
/// with the offending line number.
BenchConfig parse_config(std::string_view text);
BenchConfig load_config(const std::string& path);

/// Throws ConfigError describing the first violated constraint.
void validate(const BenchConfig& config);

/// Round-trips through parse_config.
std::string to_config_text(const BenchConfig& config);

/// `value` of one field rendered as in config files and CSV records.
std::string field_value(const BenchConfig& config, std::string_view key);

SimulationOptions simulation_options(const BenchConfig& config);
BackendSelector backend_selector(const BenchConfig& config);

}  // namespace portmd::bench
