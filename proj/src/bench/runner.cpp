#include "portmd/bench/runner.hpp"

#include <chrono>
#include <cmath>
#include <memory>

#include "portmd/core/error.hpp"
#include "portmd/integrate/initial_conditions.hpp"

namespace portmd::bench {

BenchResult run_benchmark(const BenchConfig& config) {
    validate(config);

    BenchResult result;
    result.record.config = config;
    result.record.engine_version = engine_version();

    using clock = std::chrono::steady_clock;
    std::unique_ptr<Simulation> sim;
    double wall = 0;
    real initial_energy = 0;
    std::uint64_t production_start = 0;
    try {
        InitialSystem system = init_lattice_filled(config.n_particles, config.density);
        init_velocities(system.state, config.temperature, config.seed);
        sim = std::make_unique<Simulation>(std::move(system.state), system.box, simulation_options(config),
                                           backend_selector(config));
        sim->run(config.equilibration_steps);
        sim->clear_samples();
        sim->reset_counters();
        production_start = sim->step();
        initial_energy = sim->measure().total_energy;

        const auto start = clock::now();
        try {
            sim->run(config.steps);
        } catch (...) {
            wall = std::chrono::duration<double>(clock::now() - start).count();
            throw;
        }
        wall = std::chrono::duration<double>(clock::now() - start).count();
    } catch (const SingularPairError& e) {
        result.failure = e.what();
    } catch (const OverflowAbort& e) {
        result.failure = e.what();
    } catch (const RebuildRequired& e) {
        result.failure = e.what();
    }

    BenchRecord& r = result.record;
    // a clock tick is the smallest wall time we can claim
    r.wall_time_s = std::max(wall, 1e-9);
    if (sim) {
        const std::uint64_t completed = sim->step() - production_start;
        r.steps_per_second = static_cast<double>(completed) / r.wall_time_s;
        r.force_time_fraction = std::min(1.0, sim->force_seconds() / r.wall_time_s);
        r.nlist_time_fraction = std::min(1.0 - r.force_time_fraction, sim->neighbor_seconds() / r.wall_time_s);
        r.rebuild_count = sim->rebuild_count();
        r.overflow_events = sim->overflow_events();
        const real final_energy = sim->samples().empty() ? initial_energy : sim->samples().back().total_energy;
        r.final_energy_drift_rel =
            initial_energy != 0 ? std::fabs(final_energy - initial_energy) / std::fabs(initial_energy) : 0.0;
        result.samples = sim->samples();
        result.initial_energy = initial_energy;
    }
    return result;
}

}  // namespace portmd::bench
