#include "portmd/simulation.hpp"

#include <chrono>
#include <numeric>
#include <string>

#include "portmd/core/error.hpp"
#include "portmd/forces/forces.hpp"

namespace portmd {

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
}

}  // namespace

std::string_view to_string(ForceMode mode) noexcept {
    return mode == ForceMode::all_to_all ? "all_to_all" : "truncated";
}

ForceMode parse_force_mode(std::string_view text) {
    if (text == "all_to_all") {
        return ForceMode::all_to_all;
    }
    if (text == "truncated") {
        return ForceMode::truncated;
    }
    throw ConfigError("unknown force mode '" + std::string(text) + "' (expected all_to_all|truncated)");
}

Simulation::Simulation(ParticleState state, SimBox box, SimulationOptions options, BackendSelector backend)
    : state_(std::move(state)),
      box_(box),
      options_(std::move(options)),
      backend_(backend),
      engine_(options_.sample_interval),
      identities_(state_.size()) {
    if (options_.force_mode == ForceMode::truncated) {
        if (!options_.potential.truncated()) {
            throw ConfigError("truncated force mode needs a finite cutoff");
        }
        nlist_.emplace(options_.potential.r_cut(), options_.skin, options_.stride);
    }
    std::iota(identities_.begin(), identities_.end(), 0u);

    engine_.connect(Signal::integrate,
                    [this](std::uint64_t) { vv_integrate(state_, options_.integrator, box_, backend_); });
    engine_.connect(Signal::force, [this](std::uint64_t) { update_neighbors(); });
    engine_.connect(Signal::force, [this](std::uint64_t) { compute_forces(); });
    engine_.connect(Signal::finalize, [this](std::uint64_t) { vv_finalize(state_, options_.integrator, backend_); });
    if (options_.thermostat) {
        engine_.connect(Signal::finalize, [this](std::uint64_t step) {
            andersen_thermostat(state_, *options_.thermostat, options_.integrator.dt, step, backend_);
        });
    }
    engine_.connect(Signal::sample, [this](std::uint64_t step) {
        samples_.push_back(take_sample(state_, backend_, step, options_.integrator.dt, rebuilds_));
    });

    engine_.emit(Signal::force);
}

Sample Simulation::measure() {
    return take_sample(state_, backend_, engine_.step(), options_.integrator.dt, rebuilds_);
}

void Simulation::reset_counters() {
    rebuilds_ = 0;
    overflow_events_ = 0;
    force_seconds_ = 0;
    neighbor_seconds_ = 0;
}

void Simulation::update_neighbors() {
    if (!nlist_) {
        return;
    }
    const auto start = clock::now();
    if (nlist_->rebuild_count == 0 || needs_rebuild(state_, box_, *nlist_, backend_)) {
        rebuild_neighbors();
    }
    neighbor_seconds_ += seconds_since(start);
}

void Simulation::rebuild_neighbors() {
    NeighborList& list = *nlist_;
    CellGrid grid = bin_particles(state_, box_, list.r_list);
    if (options_.reorder_on_rebuild) {
        const auto order = reorder_by_cell(state_, grid);
        std::vector<std::uint32_t> ids(identities_.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            ids[k] = identities_[order[k]];
        }
        identities_ = std::move(ids);
        grid = bin_particles(state_, box_, list.r_list);
    }
    build_neighbor_list(list, state_, box_, grid, backend_);
    for (unsigned retry = 0; list.overflow; ++retry) {
        ++overflow_events_;
        if (retry == options_.overflow_retries) {
            throw OverflowAbort("neighbor list still overflows at stride " + std::to_string(list.stride) + " after " +
                                std::to_string(retry) + " doublings (longest row " +
                                std::to_string(list.max_row_length) + ")");
        }
        list.stride *= 2;
        build_neighbor_list(list, state_, box_, grid, backend_);
    }
    ++rebuilds_;
}

void Simulation::compute_forces() {
    const auto start = clock::now();
    if (nlist_) {
        compute_forces_truncated(state_, options_.potential, box_, *nlist_, backend_);
    } else {
        compute_forces_all_to_all(state_, options_.potential, box_, backend_);
    }
    force_seconds_ += seconds_since(start);
}

}  // namespace portmd
