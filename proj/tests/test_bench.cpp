#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "portmd/bench/config.hpp"
#include "portmd/bench/presets.hpp"
#include "portmd/bench/record.hpp"
#include "portmd/bench/runner.hpp"
#include "portmd/bench/scaling.hpp"
#include "portmd/core/error.hpp"

using namespace portmd;
using namespace portmd::bench;

namespace {

BenchConfig small_config() {
    BenchConfig c = find_preset("nve").config;
    c.n_particles = 256;
    c.steps = 60;
    c.equilibration_steps = 20;
    c.sample_interval = 20;
    return c;
}

std::string replace_line(std::string text, const std::string& key, const std::string& line) {
    const auto at = text.find(key + " = ");
    const auto eol = text.find('\n', at);
    return text.replace(at, eol - at, line);
}

}  // namespace

TEST(Config, RoundTripsThroughText) {
    const BenchConfig c = small_config();
    const std::string text = to_config_text(c);
    const BenchConfig back = parse_config(text);
    EXPECT_EQ(to_config_text(back), text);
    for (auto key : config_keys()) {
        EXPECT_NE(text.find(std::string(key) + " = "), std::string::npos) << key;
    }
}

TEST(Config, CommentsAndWhitespace) {
    std::string text = "# benchmark\n\n" + to_config_text(small_config());
    text = replace_line(text, "seed", "  seed=42   # trailing comment");
    EXPECT_EQ(parse_config(text).seed, 42u);
}

TEST(Config, RejectsUnknownMissingDuplicateAndBadValues) {
    const std::string text = to_config_text(small_config());
    EXPECT_THROW(parse_config(text + "colour = blue\n"), ConfigError);
    EXPECT_THROW(parse_config(text + "seed = 3\n"), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "seed", "")), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "steps", "steps = ten")), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "steps", "steps = -5")), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "density", "density = 0.8x")), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "deterministic", "deterministic = maybe")), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "force_mode", "force_mode = cells")), ConfigError);
    EXPECT_THROW(parse_config(replace_line(text, "seed", "seed 3")), ConfigError);
    try {
        parse_config(replace_line(text, "seed", ""));
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("seed"), std::string::npos);
    }
    EXPECT_EQ(parse_config(replace_line(text, "r_cut", "r_cut = inf")).r_cut, INFINITY);
}

TEST(Config, Validation) {
    BenchConfig c = small_config();
    EXPECT_NO_THROW(validate(c));
    c.steps = 0;
    EXPECT_THROW(validate(c), ConfigError);
    c = small_config();
    c.n_particles = 0;
    EXPECT_THROW(validate(c), ConfigError);
    c = small_config();
    c.r_cut = INFINITY;
    EXPECT_THROW(validate(c), ConfigError);
    c.force_mode = ForceMode::all_to_all;
    EXPECT_NO_THROW(validate(c));
    c = small_config();
    c.n_particles = 20;
    EXPECT_THROW(validate(c), ConfigError);
    c = small_config();
    c.worker_count = 0;
    EXPECT_THROW(validate(c), ConfigError);
    c = small_config();
    c.dt = 0;
    EXPECT_THROW(validate(c), ConfigError);
    c = small_config();
    c.thermostat_rate = 5;
    c.temperature = 0;
    EXPECT_THROW(validate(c), ConfigError);
}

TEST(RunBenchmark, ZeroStepsIsRejected) {
    BenchConfig c = small_config();
    c.steps = 0;
    EXPECT_THROW(run_benchmark(c), ConfigError);
}

TEST(RunBenchmark, RecordInvariantsAndReproducibility) {
    const BenchConfig c = small_config();
    const BenchResult a = run_benchmark(c);
    ASSERT_FALSE(a.failure.has_value());
    const BenchRecord& r = a.record;
    EXPECT_GT(r.wall_time_s, 0.0);
    EXPECT_GT(r.steps_per_second, 0.0);
    EXPECT_GE(r.force_time_fraction, 0.0);
    EXPECT_GE(r.nlist_time_fraction, 0.0);
    EXPECT_LE(r.force_time_fraction + r.nlist_time_fraction, 1.0);
    EXPECT_EQ(r.engine_version, engine_version());
    EXPECT_LT(r.final_energy_drift_rel, 1e-3);
    ASSERT_EQ(a.samples.size(), 3u);
    EXPECT_EQ(a.samples.front().step, 40u);

    const BenchResult b = run_benchmark(c);
    EXPECT_EQ(a.samples, b.samples);
    BenchConfig p = c;
    p.backend = BackendKind::parallel;
    p.worker_count = 2;
    EXPECT_EQ(run_benchmark(p).samples, a.samples);
}

TEST(Records, HeaderFollowsFieldOrder) {
    const auto cols = record_columns();
    ASSERT_EQ(cols.size(), config_keys().size() + 8);
    EXPECT_EQ(cols.front(), "n_particles");
    EXPECT_EQ(cols[config_keys().size()], "wall_time_s");
    EXPECT_EQ(cols.back(), "engine_version");
}

TEST(Records, RoundTripWithFullPrecision) {
    BenchRecord r;
    r.config = small_config();
    r.config.density = 0.1 + 0.2;
    r.wall_time_s = 1.0 / 3.0;
    r.steps_per_second = 12345.678901234567;
    r.force_time_fraction = 0.6;
    r.nlist_time_fraction = 0.3;
    r.rebuild_count = 17;
    r.overflow_events = 1;
    r.final_energy_drift_rel = 1.25e-7;
    r.engine_version = engine_version();
    std::stringstream out;
    write_records_csv(out, std::vector<BenchRecord>{r, r});
    const std::string text = out.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_EQ(text.find('\r'), std::string::npos);
    EXPECT_NE(text.find("0.30000000000000004"), std::string::npos);
    const auto back = read_records_csv(out);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].wall_time_s, r.wall_time_s);
    EXPECT_EQ(back[0].config.density, r.config.density);
    EXPECT_EQ(back[0].rebuild_count, 17u);
    EXPECT_EQ(record_row(back[1]), record_row(r));
}

TEST(Records, RejectsMalformedInput) {
    std::stringstream missing("n_particles,density\n1,2\n");
    EXPECT_THROW(read_records_csv(missing), ConfigError);
    std::stringstream empty("");
    EXPECT_THROW(read_records_csv(empty), ConfigError);
    BenchRecord r;
    r.config = small_config();
    std::stringstream good;
    write_records_csv(good, std::vector<BenchRecord>{r});
    std::stringstream truncated(good.str().substr(0, good.str().size() - 10) + "\n");
    EXPECT_THROW(read_records_csv(truncated), ConfigError);
}

TEST(Samples, CsvColumns) {
    EXPECT_EQ(sample_columns(), (std::vector<std::string>{"step", "time", "potential_energy", "kinetic_energy",
                                                          "total_energy", "temperature", "px", "py", "pz",
                                                          "rebuild_count"}));
    Sample s{};
    s.step = 5;
    s.total_momentum = Vec3{1, 2, 3};
    std::stringstream out;
    write_samples_csv(out, std::vector<Sample>{s});
    std::string header, row;
    std::getline(out, header);
    std::getline(out, row);
    EXPECT_EQ(header, "step,time,potential_energy,kinetic_energy,total_energy,temperature,px,py,pz,rebuild_count");
    EXPECT_EQ(row, "5,0,0,0,0,0,1,2,3,0");
}

namespace {

BenchRecord timed(BackendKind kind, unsigned workers, double seconds) {
    BenchRecord r;
    r.config = small_config();
    r.config.backend = kind;
    r.config.worker_count = workers;
    r.wall_time_s = seconds;
    return r;
}

}  // namespace

TEST(Scaling, SpeedupAndEfficiencyArithmetic) {
    const std::vector<BenchRecord> records{timed(BackendKind::parallel, 1, 10), timed(BackendKind::parallel, 6, 2)};
    const auto rows = compute_speedup_efficiency(records, Baseline::single_worker);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].worker_count, 1u);
    EXPECT_DOUBLE_EQ(rows[0].speedup, 1.0);
    EXPECT_DOUBLE_EQ(rows[0].efficiency, 1.0);
    EXPECT_DOUBLE_EQ(rows[1].speedup, 5.0);
    EXPECT_NEAR(rows[1].efficiency, 0.833, 5e-4);
}

TEST(Scaling, SequentialBaseline) {
    const std::vector<BenchRecord> records{timed(BackendKind::parallel, 2, 2), timed(BackendKind::sequential, 1, 20),
                                           timed(BackendKind::parallel, 1, 4)};
    const auto rows = compute_speedup_efficiency(records, Baseline::sequential);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_DOUBLE_EQ(rows[0].speedup, 5.0);
    EXPECT_DOUBLE_EQ(rows[1].speedup, 10.0);
    EXPECT_DOUBLE_EQ(rows[1].efficiency, 1.0);
}

TEST(Scaling, RefusesMismatchedPhysicsAndMissingBaselines) {
    std::vector<BenchRecord> records{timed(BackendKind::parallel, 1, 10), timed(BackendKind::parallel, 2, 5)};
    records[1].config.temperature = 3.0;
    records[1].config.steps = 7;
    try {
        compute_speedup_efficiency(records, Baseline::single_worker);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("temperature"), std::string::npos);
        EXPECT_NE(what.find("steps"), std::string::npos);
    }
    const std::vector<BenchRecord> no_seq{timed(BackendKind::parallel, 1, 10)};
    EXPECT_THROW(compute_speedup_efficiency(no_seq, Baseline::sequential), ConfigError);
    const std::vector<BenchRecord> no_single{timed(BackendKind::parallel, 2, 10)};
    EXPECT_THROW(compute_speedup_efficiency(no_single, Baseline::single_worker), ConfigError);
    EXPECT_EQ(parse_baseline("single"), Baseline::single_worker);
    EXPECT_THROW(parse_baseline("best"), ConfigError);
}

TEST(Presets, WorkloadCounts) {
    EXPECT_EQ(find_preset("cpu_all_to_all").config.n_particles, 2000u);
    EXPECT_EQ(find_preset("cpu_all_to_all").config.steps, 5000u);
    EXPECT_EQ(find_preset("cpu_all_to_all").config.force_mode, ForceMode::all_to_all);
    EXPECT_EQ(find_preset("gpu_all_to_all").config.steps, 20000u);
    EXPECT_EQ(find_preset("truncated_desk").config.n_particles, 10000u);
    EXPECT_EQ(find_preset("truncated_desk").config.force_mode, ForceMode::truncated);
    EXPECT_DOUBLE_EQ(find_preset("thermostat").config.thermostat_rate * find_preset("thermostat").config.dt, 0.01);
    EXPECT_EQ(find_preset("nve").config.thermostat_rate, 0.0);
    for (const auto& p : presets()) {
        EXPECT_NO_THROW(validate(p.config)) << p.name;
        EXPECT_DOUBLE_EQ(p.config.density, 0.8);
        EXPECT_DOUBLE_EQ(p.config.r_cut, 2.5);
    }
    EXPECT_THROW(find_preset("nope"), ConfigError);
}
