#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "portmd/backend/backend.hpp"
#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"
#include "portmd/core/signal_engine.hpp"
#include "portmd/integrate/integrate.hpp"
#include "portmd/neighbor/neighbor_list.hpp"
#include "portmd/observables/observables.hpp"
#include "portmd/potential/lennard_jones.hpp"

namespace portmd {

enum class ForceMode { all_to_all, truncated };

std::string_view to_string(ForceMode mode) noexcept;
ForceMode parse_force_mode(std::string_view text);

struct SimulationOptions {
    ForceMode force_mode = ForceMode::all_to_all;
    LJParams potential = LJParams::untruncated(1, 1);
    IntegratorParams integrator;
    std::optional<ThermostatParams> thermostat;
    real skin = real(0.5);
    std::size_t stride = 64;
    /// Stride doublings allowed per rebuild before giving up with OverflowAbort.
    unsigned overflow_retries = 8;
    /// Sort particles by cell before every list build.
    bool reorder_on_rebuild = true;
    std::uint64_t sample_interval = 1;
};

/// A complete MD run wired through the signal engine:
///
///   integrate -> velocity-Verlet first half step
///   force     -> neighbor-list update (truncated mode), force kernel
///   finalize  -> velocity-Verlet second half step, thermostat
///   sample    -> observables appended to samples()
///
/// Forces for the initial positions are computed on construction.
class Simulation {
public:
    Simulation(ParticleState state, SimBox box, SimulationOptions options, BackendSelector backend = {});

    Simulation(const Simulation&) = delete;
    Simulation& operator=(const Simulation&) = delete;

    void run(std::uint64_t steps) { engine_.run_steps(steps); }

    /// Observables of the current state, without recording them.
    Sample measure();

    ParticleState& state() noexcept { return state_; }
    const SimBox& box() const noexcept { return box_; }
    const SimulationOptions& options() const noexcept { return options_; }
    Backend& backend() noexcept { return backend_; }
    SignalEngine& signals() noexcept { return engine_; }
    std::uint64_t step() const noexcept { return engine_.step(); }

    const std::vector<Sample>& samples() const noexcept { return samples_; }
    void clear_samples() { samples_.clear(); }

    /// Original index of the particle now stored in each slot; changes when
    /// particles are reordered by cell.
    const std::vector<std::uint32_t>& identities() const noexcept { return identities_; }

    const std::optional<NeighborList>& neighbor_list() const noexcept { return nlist_; }
    std::uint64_t rebuild_count() const noexcept { return rebuilds_; }
    std::uint64_t overflow_events() const noexcept { return overflow_events_; }
    double force_seconds() const noexcept { return force_seconds_; }
    double neighbor_seconds() const noexcept { return neighbor_seconds_; }
    /// Zeroes rebuild/overflow counters and phase timers.
    void reset_counters();

private:
    void update_neighbors();
    void rebuild_neighbors();
    void compute_forces();

    ParticleState state_;
    SimBox box_;
    SimulationOptions options_;
    Backend backend_;
    SignalEngine engine_;
    std::optional<NeighborList> nlist_;
    std::vector<Sample> samples_;
    std::vector<std::uint32_t> identities_;
    std::uint64_t rebuilds_ = 0;
    std::uint64_t overflow_events_ = 0;
    double force_seconds_ = 0;
    double neighbor_seconds_ = 0;
};

}  // namespace portmd
