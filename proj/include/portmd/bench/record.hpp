#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "portmd/bench/config.hpp"
#include "portmd/observables/observables.hpp"

namespace portmd::bench {

/// Configuration, timings and counters of one benchmark run.
struct BenchRecord {
    BenchConfig config;
    double wall_time_s = 0;
    double steps_per_second = 0;
    double force_time_fraction = 0;
    double nlist_time_fraction = 0;
    std::uint64_t rebuild_count = 0;
    std::uint64_t overflow_events = 0;
    double final_energy_drift_rel = 0;
    std::string engine_version;
};

/// Column names of the records CSV: config keys, then the measured fields.
std::vector<std::string> record_columns();
std::string record_header();
/// One CSV line without the trailing newline; reals printed with 17 significant digits.
std::string record_row(const BenchRecord& record);

void write_records_csv(std::ostream& out, std::span<const BenchRecord> records);
/// Appends to `path`, writing the header first if the file is new or empty.
void append_records_csv(const std::string& path, std::span<const BenchRecord> records);
/// Parses a records CSV. Throws ConfigError on a header or field mismatch.
std::vector<BenchRecord> read_records_csv(std::istream& in);

std::vector<std::string> sample_columns();
void write_samples_csv(std::ostream& out, std::span<const Sample> samples);

std::string engine_version();

}  // namespace portmd::bench
