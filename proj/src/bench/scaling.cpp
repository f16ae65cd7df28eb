#include "portmd/bench/scaling.hpp"

#include <algorithm>

#include "portmd/core/error.hpp"

namespace portmd::bench {

std::string_view to_string(Baseline baseline) {
    return baseline == Baseline::sequential ? "sequential" : "single";
}

Baseline parse_baseline(std::string_view text) {
    if (text == "sequential") {
        return Baseline::sequential;
    }
    if (text == "single") {
        return Baseline::single_worker;
    }
    throw ConfigError("unknown baseline '" + std::string(text) + "' (expected sequential or single)");
}

std::vector<std::string> physics_mismatch(const BenchConfig& a, const BenchConfig& b) {
    std::vector<std::string> differing;
    for (auto key : config_keys()) {
        if (key == "backend" || key == "worker_count") {
            continue;
        }
        if (field_value(a, key) != field_value(b, key)) {
            differing.emplace_back(key);
        }
    }
    return differing;
}

std::vector<ScalingRow> compute_speedup_efficiency(std::span<const BenchRecord> records, Baseline baseline) {
    if (records.empty()) {
        throw ConfigError("no records to compare");
    }
    std::vector<std::string> differing;
    for (const auto& r : records) {
        for (auto& key : physics_mismatch(records.front().config, r.config)) {
            if (std::find(differing.begin(), differing.end(), key) == differing.end()) {
                differing.push_back(std::move(key));
            }
        }
    }
    if (!differing.empty()) {
        std::string list;
        for (const auto& key : differing) {
            list += (list.empty() ? "" : ", ") + key;
        }
        throw ConfigError("records differ in physics fields: " + list);
    }

    const BenchRecord* sequential = nullptr;
    const BenchRecord* single = nullptr;
    std::vector<const BenchRecord*> parallel;
    for (const auto& r : records) {
        if (r.config.backend == BackendKind::sequential) {
            sequential = sequential ? sequential : &r;
        } else {
            parallel.push_back(&r);
            if (r.config.worker_count == 1 && !single) {
                single = &r;
            }
        }
    }
    if (!single) {
        throw ConfigError("no single-worker parallel record");
    }
    if (baseline == Baseline::sequential && !sequential) {
        throw ConfigError("no sequential baseline record");
    }
    const double t_base = baseline == Baseline::sequential ? sequential->wall_time_s : single->wall_time_s;
    const double t_single = single->wall_time_s;

    std::stable_sort(parallel.begin(), parallel.end(), [](const BenchRecord* a, const BenchRecord* b) {
        return a->config.worker_count < b->config.worker_count;
    });
    std::vector<ScalingRow> rows;
    for (const BenchRecord* r : parallel) {
        if (!(r->wall_time_s > 0)) {
            throw ConfigError("record with non-positive wall time");
        }
        ScalingRow row;
        row.worker_count = r->config.worker_count;
        row.wall_time_s = r->wall_time_s;
        row.speedup = t_base / r->wall_time_s;
        row.efficiency = (t_single / r->wall_time_s) / r->config.worker_count;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace portmd::bench
