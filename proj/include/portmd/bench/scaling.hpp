#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "portmd/bench/record.hpp"

namespace portmd::bench {

enum class Baseline { sequential, single_worker };

std::string_view to_string(Baseline baseline);
/// Accepts "sequential" and "single".
Baseline parse_baseline(std::string_view text);

struct ScalingRow {
    unsigned worker_count = 0;
    double wall_time_s = 0;
    double speedup = 0;
    /// Speedup over the single-worker parallel run divided by worker_count.
    double efficiency = 0;
};

/// Config keys that differ between two configs, ignoring backend and worker_count.
std::vector<std::string> physics_mismatch(const BenchConfig& a, const BenchConfig& b);

/// One row per parallel record, ordered by worker count. Throws ConfigError
/// if the records disagree on physics, or if the chosen baseline or the
/// single-worker parallel run is missing.
std::vector<ScalingRow> compute_speedup_efficiency(std::span<const BenchRecord> records, Baseline baseline);

}  // namespace portmd::bench
