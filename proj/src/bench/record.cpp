#include "portmd/bench/record.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "portmd/core/error.hpp"

#ifndef PORTMD_VERSION
#define PORTMD_VERSION "dev"
#endif

namespace portmd::bench {

namespace {

constexpr const char* measured_columns[] = {"wall_time_s",         "steps_per_second", "force_time_fraction",
                                            "nlist_time_fraction", "rebuild_count",    "overflow_events",
                                            "final_energy_drift_rel", "engine_version"};

std::string g17(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

double to_double(const std::string& text, const std::string& column) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("records CSV: bad number '" + text + "' in column " + column);
    }
    return value;
}

}  // namespace

std::string engine_version() { return std::string("portmd ") + PORTMD_VERSION; }

std::vector<std::string> record_columns() {
    std::vector<std::string> columns;
    for (auto key : config_keys()) {
        columns.emplace_back(key);
    }
    for (const char* c : measured_columns) {
        columns.emplace_back(c);
    }
    return columns;
}

std::string record_header() {
    std::string out;
    for (const auto& c : record_columns()) {
        out += (out.empty() ? "" : ",") + c;
    }
    return out;
}

std::string record_row(const BenchRecord& r) {
    std::string out;
    for (auto key : config_keys()) {
        out += field_value(r.config, key) + ",";
    }
    out += g17(r.wall_time_s) + "," + g17(r.steps_per_second) + "," + g17(r.force_time_fraction) + "," +
           g17(r.nlist_time_fraction) + "," + std::to_string(r.rebuild_count) + "," +
           std::to_string(r.overflow_events) + "," + g17(r.final_energy_drift_rel) + "," + r.engine_version;
    return out;
}

void write_records_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << record_header() << '\n';
    for (const auto& r : records) {
        out << record_row(r) << '\n';
    }
}

void append_records_csv(const std::string& path, std::span<const BenchRecord> records) {
    bool fresh = true;
    {
        std::ifstream probe(path, std::ios::binary | std::ios::ate);
        fresh = !probe || probe.tellg() == 0;
    }
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) {
        throw std::runtime_error("cannot open records file '" + path + "' for writing");
    }
    if (fresh) {
        out << record_header() << '\n';
    }
    for (const auto& r : records) {
        out << record_row(r) << '\n';
    }
}

std::vector<BenchRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("records CSV is empty");
    }
    const auto header = split_csv_line(line);
    const auto expected = record_columns();
    if (header != expected) {
        for (const auto& column : expected) {
            if (std::find(header.begin(), header.end(), column) == header.end()) {
                throw ConfigError("records CSV: missing column '" + column + "'");
            }
        }
        throw ConfigError("records CSV: columns out of order");
    }
    const std::size_t n_config = config_keys().size();
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != expected.size()) {
            throw ConfigError("records CSV: expected " + std::to_string(expected.size()) + " fields, got " +
                              std::to_string(fields.size()));
        }
        std::string config_text;
        for (std::size_t k = 0; k < n_config; ++k) {
            config_text += expected[k] + "=" + fields[k] + "\n";
        }
        BenchRecord r;
        r.config = parse_config(config_text);
        r.wall_time_s = to_double(fields[n_config], expected[n_config]);
        r.steps_per_second = to_double(fields[n_config + 1], expected[n_config + 1]);
        r.force_time_fraction = to_double(fields[n_config + 2], expected[n_config + 2]);
        r.nlist_time_fraction = to_double(fields[n_config + 3], expected[n_config + 3]);
        r.rebuild_count = static_cast<std::uint64_t>(to_double(fields[n_config + 4], expected[n_config + 4]));
        r.overflow_events = static_cast<std::uint64_t>(to_double(fields[n_config + 5], expected[n_config + 5]));
        r.final_energy_drift_rel = to_double(fields[n_config + 6], expected[n_config + 6]);
        r.engine_version = fields[n_config + 7];
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<std::string> sample_columns() {
    return {"step", "time", "potential_energy", "kinetic_energy", "total_energy", "temperature",
            "px",   "py",   "pz",               "rebuild_count"};
}

void write_samples_csv(std::ostream& out, std::span<const Sample> samples) {
    const auto columns = sample_columns();
    for (std::size_t k = 0; k < columns.size(); ++k) {
        out << (k ? "," : "") << columns[k];
    }
    out << '\n';
    for (const auto& s : samples) {
        out << s.step << ',' << g17(s.time) << ',' << g17(s.potential_energy) << ',' << g17(s.kinetic_energy) << ','
            << g17(s.total_energy) << ',' << g17(s.temperature) << ',' << g17(s.total_momentum.x) << ','
            << g17(s.total_momentum.y) << ',' << g17(s.total_momentum.z) << ',' << s.rebuild_count << '\n';
    }
}

}  // namespace portmd::bench
