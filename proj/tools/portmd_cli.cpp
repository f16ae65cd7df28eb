// Command-line front end: run, sweep, verify, presets.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "portmd/bench/config.hpp"
#include "portmd/bench/presets.hpp"
#include "portmd/bench/record.hpp"
#include "portmd/bench/runner.hpp"
#include "portmd/bench/scaling.hpp"
#include "portmd/core/error.hpp"
#include "portmd/verify/suites.hpp"

namespace {

using namespace portmd;
using namespace portmd::bench;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_failure = 2;

BenchConfig config_from(const std::string& path, const std::string& preset) {
    if (!path.empty() && !preset.empty()) {
        throw ConfigError("give either --config or --preset, not both");
    }
    if (!preset.empty()) {
        return find_preset(preset).config;
    }
    if (path.empty()) {
        throw ConfigError("--config or --preset is required");
    }
    return load_config(path);
}

void emit_records(const std::vector<BenchRecord>& records, const std::string& output) {
    if (output.empty()) {
        write_records_csv(std::cout, records);
    } else {
        append_records_csv(output, records);
    }
}

std::pair<unsigned, unsigned> parse_worker_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const unsigned w = static_cast<unsigned>(std::stoul(text, &used));
            if (used == text.size() && w > 0) {
                return {w, w};
            }
        } else {
            const std::string lo_text = text.substr(0, dots);
            const std::string hi_text = text.substr(dots + 2);
            std::size_t used_hi = 0;
            const unsigned lo = static_cast<unsigned>(std::stoul(lo_text, &used));
            const unsigned hi = static_cast<unsigned>(std::stoul(hi_text, &used_hi));
            if (used == lo_text.size() && used_hi == hi_text.size() && lo > 0 && lo <= hi) {
                return {lo, hi};
            }
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("--workers expects a..b with 1 <= a <= b, got '" + text + "'");
}

int command_run(const std::string& config_path, const std::string& preset, const std::string& output,
                const std::string& samples_path) {
    const BenchConfig config = config_from(config_path, preset);
    const BenchResult result = run_benchmark(config);
    emit_records({result.record}, output);
    if (!samples_path.empty()) {
        std::ofstream out(samples_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open samples file '" + samples_path + "'");
        }
        write_samples_csv(out, result.samples);
    }
    if (result.failure) {
        std::cerr << "run aborted: " << *result.failure << '\n';
        return exit_failure;
    }
    return exit_ok;
}

int command_sweep(const std::string& config_path, const std::string& preset, const std::string& workers,
                  const std::string& baseline_text, const std::string& output) {
    const BenchConfig base = config_from(config_path, preset);
    const auto [lo, hi] = parse_worker_range(workers);
    const Baseline baseline = parse_baseline(baseline_text);

    std::vector<BenchRecord> records;
    BenchConfig sequential = base;
    sequential.backend = BackendKind::sequential;
    sequential.worker_count = 1;
    std::vector<BenchConfig> configs{sequential};
    for (unsigned w = lo; w <= hi; ++w) {
        BenchConfig c = base;
        c.backend = BackendKind::parallel;
        c.worker_count = w;
        configs.push_back(c);
    }
    bool single_present = lo == 1;
    if (!single_present) {
        BenchConfig c = base;
        c.backend = BackendKind::parallel;
        c.worker_count = 1;
        configs.insert(configs.begin() + 1, c);
    }
    for (const auto& c : configs) {
        validate(c);
    }
    for (const auto& c : configs) {
        std::cerr << "running " << to_string(c.backend) << " with " << c.worker_count << " worker(s)\n";
        BenchResult result = run_benchmark(c);
        if (result.failure) {
            emit_records(records, output);
            std::cerr << "run aborted: " << *result.failure << '\n';
            return exit_failure;
        }
        records.push_back(std::move(result.record));
    }
    emit_records(records, output);

    std::fprintf(stderr, "baseline: %s\n%8s %12s %10s %10s\n", std::string(to_string(baseline)).c_str(), "workers",
                 "wall_s", "speedup", "efficiency");
    for (const auto& row : compute_speedup_efficiency(records, baseline)) {
        std::fprintf(stderr, "%8u %12.4f %10.3f %10.3f\n", row.worker_count, row.wall_time_s, row.speedup,
                     row.efficiency);
    }
    return exit_ok;
}

int command_verify() {
    bool all = true;
    for (const auto& r : verify::quick_suites()) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    return all ? exit_ok : exit_failure;
}

int command_presets_list() {
    for (const auto& p : presets()) {
        std::cout << p.name << "\n  " << p.summary << "\n  " << p.notes << '\n';
    }
    return exit_ok;
}

int command_presets_show(const std::string& name) {
    std::cout << to_config_text(find_preset(name).config);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"portmd: Lennard-Jones molecular dynamics benchmark engine"};
    app.require_subcommand(1);
    app.set_version_flag("--version", engine_version());

    std::string config_path, preset, output, samples_path, workers, baseline = "single", preset_name;

    auto* run = app.add_subcommand("run", "Run one benchmark and emit its record");
    run->add_option("--config", config_path, "key=value config file");
    run->add_option("--preset", preset, "Use a named preset instead of a config file");
    run->add_option("--output", output, "Append the record to this CSV (default: print to stdout)");
    run->add_option("--samples", samples_path, "Write the sample series to this CSV");

    auto* sweep = app.add_subcommand("sweep", "Sequential baseline plus one parallel run per worker count");
    sweep->add_option("--config", config_path, "key=value config file");
    sweep->add_option("--preset", preset, "Use a named preset instead of a config file");
    sweep->add_option("--workers", workers, "Worker range a..b")->required();
    sweep->add_option("--baseline", baseline, "sequential or single")->check(CLI::IsMember({"sequential", "single"}));
    sweep->add_option("--output", output, "Append records to this CSV (default: print to stdout)");

    auto* verify = app.add_subcommand("verify", "Run the oracle suites (forces, neighbor lists, conservation)");

    auto* presets_cmd = app.add_subcommand("presets", "Workload presets");
    presets_cmd->require_subcommand(1);
    auto* presets_list = presets_cmd->add_subcommand("list", "List presets");
    auto* presets_show = presets_cmd->add_subcommand("show", "Print a preset as a config file");
    presets_show->add_option("name", preset_name, "Preset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*run) return command_run(config_path, preset, output, samples_path);
        if (*sweep) return command_sweep(config_path, preset, workers, baseline, output);
        if (*verify) return command_verify();
        if (*presets_list) return command_presets_list();
        if (*presets_show) return command_presets_show(preset_name);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_invalid;
}
