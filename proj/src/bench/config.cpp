#include "portmd/bench/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "portmd/core/error.hpp"

namespace portmd::bench {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
    throw ConfigError("invalid value '" + std::string(value) + "' for '" + std::string(key) + "': expected " +
                      std::string(expected));
}

std::uint64_t parse_count(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_value(key, value, "a non-negative integer");
    }
    return out;
}

real parse_real(std::string_view key, std::string_view value) {
    double out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || std::isnan(out)) {
        bad_value(key, value, "a real number");
    }
    return static_cast<real>(out);
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    bad_value(key, value, "true or false");
}

void assign(BenchConfig& c, std::string_view key, std::string_view value) {
    if (key == "n_particles") c.n_particles = parse_count(key, value);
    else if (key == "density") c.density = parse_real(key, value);
    else if (key == "temperature") c.temperature = parse_real(key, value);
    else if (key == "dt") c.dt = parse_real(key, value);
    else if (key == "steps") c.steps = parse_count(key, value);
    else if (key == "r_cut") c.r_cut = parse_real(key, value);
    else if (key == "skin") c.skin = parse_real(key, value);
    else if (key == "thermostat_rate") c.thermostat_rate = parse_real(key, value);
    else if (key == "seed") c.seed = parse_count(key, value);
    else if (key == "force_mode") c.force_mode = parse_force_mode(value);
    else if (key == "backend") c.backend = parse_backend_kind(value);
    else if (key == "worker_count") {
        const auto w = parse_count(key, value);
        if (w > 4096) {
            bad_value(key, value, "at most 4096 workers");
        }
        c.worker_count = static_cast<unsigned>(w);
    }
    else if (key == "deterministic") c.deterministic = parse_bool(key, value);
    else if (key == "sample_interval") c.sample_interval = parse_count(key, value);
    else if (key == "equilibration_steps") c.equilibration_steps = parse_count(key, value);
    else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys = {
        "n_particles", "density",    "temperature", "dt",           "steps",
        "r_cut",       "skin",       "thermostat_rate", "seed",     "force_mode",
        "backend",     "worker_count", "deterministic", "sample_interval", "equilibration_steps"};
    return keys;
}

std::string field_value(const BenchConfig& c, std::string_view key) {
    if (key == "n_particles") return std::to_string(c.n_particles);
    if (key == "density") return format_real(c.density);
    if (key == "temperature") return format_real(c.temperature);
    if (key == "dt") return format_real(c.dt);
    if (key == "steps") return std::to_string(c.steps);
    if (key == "r_cut") return format_real(c.r_cut);
    if (key == "skin") return format_real(c.skin);
    if (key == "thermostat_rate") return format_real(c.thermostat_rate);
    if (key == "seed") return std::to_string(c.seed);
    if (key == "force_mode") return std::string(to_string(c.force_mode));
    if (key == "backend") return std::string(to_string(c.backend));
    if (key == "worker_count") return std::to_string(c.worker_count);
    if (key == "deterministic") return c.deterministic ? "true" : "false";
    if (key == "sample_interval") return std::to_string(c.sample_interval);
    if (key == "equilibration_steps") return std::to_string(c.equilibration_steps);
    throw ConfigError("unknown config key '" + std::string(key) + "'");
}

BenchConfig parse_config(std::string_view text) {
    BenchConfig config;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_number = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_number;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_number) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (auto it = seen.find(key); it != seen.end()) {
            throw ConfigError("line " + std::to_string(line_number) + ": duplicate key '" + std::string(key) +
                              "' (first set on line " + std::to_string(it->second) + ")");
        }
        try {
            assign(config, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_number) + ": " + e.what());
        }
        seen.emplace(std::string(key), line_number);
    }
    std::string missing;
    for (auto key : config_keys()) {
        if (!seen.contains(key)) {
            missing += (missing.empty() ? "" : ", ") + std::string(key);
        }
    }
    if (!missing.empty()) {
        throw ConfigError("missing config keys: " + missing);
    }
    return config;
}

BenchConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string to_config_text(const BenchConfig& config) {
    std::string out;
    for (auto key : config_keys()) {
        out += std::string(key) + " = " + field_value(config, key) + "\n";
    }
    return out;
}

void validate(const BenchConfig& c) {
    auto fail = [](const std::string& message) { throw ConfigError(message); };
    if (c.n_particles == 0) fail("n_particles must be positive");
    if (c.n_particles > 0xFFFFFFFFull) fail("n_particles must fit in 32 bits");
    if (c.steps == 0) fail("steps must be positive");
    if (c.sample_interval == 0) fail("sample_interval must be positive");
    if (c.worker_count == 0) fail("worker_count must be positive");
    if (!(c.density > 0) || !std::isfinite(c.density)) fail("density must be positive");
    if (!(c.dt > 0) || !std::isfinite(c.dt)) fail("dt must be positive");
    if (!(c.temperature >= 0) || !std::isfinite(c.temperature)) fail("temperature must be non-negative");
    if (!(c.thermostat_rate >= 0) || !std::isfinite(c.thermostat_rate)) fail("thermostat_rate must be non-negative");
    if (c.thermostat_rate > 0 && !(c.temperature > 0)) fail("a thermostat needs a positive temperature");
    if (!(c.r_cut > 1)) fail("r_cut must exceed sigma = 1");
    if (!(c.skin >= 0) || !std::isfinite(c.skin)) fail("skin must be non-negative");
    if (c.force_mode == ForceMode::truncated) {
        if (!std::isfinite(c.r_cut)) fail("force_mode=truncated requires a finite r_cut");
        const real edge = std::cbrt(static_cast<real>(c.n_particles) / c.density);
        if (edge < c.r_cut + c.skin) {
            fail("box edge " + format_real(edge) + " is shorter than r_cut + skin = " + format_real(c.r_cut + c.skin));
        }
    }
}

SimulationOptions simulation_options(const BenchConfig& c) {
    SimulationOptions o;
    o.force_mode = c.force_mode;
    o.potential = LJParams::make_shifted(1, 1, c.r_cut);
    o.integrator.dt = c.dt;
    if (c.thermostat_rate > 0) {
        o.thermostat = ThermostatParams{c.temperature, c.thermostat_rate, c.seed};
    }
    o.skin = c.skin;
    o.sample_interval = c.sample_interval;
    return o;
}

BackendSelector backend_selector(const BenchConfig& c) {
    BackendSelector s;
    s.kind = c.backend;
    s.worker_count = c.worker_count;
    s.deterministic = c.deterministic;
    return s;
}

}  // namespace portmd::bench
