#pragma once

#include <optional>
#include <string>
#include <vector>

#include "portmd/bench/config.hpp"
#include "portmd/bench/record.hpp"

namespace portmd::bench {

struct BenchResult {
    BenchRecord record;
    std::vector<Sample> samples;
    /// Total energy at the start of production, the reference for energy drift.
    real initial_energy = 0;
    /// Set when the run stopped early on a physics failure (singular pair,
    /// neighbor-list overflow beyond the retry budget); `record` then holds
    /// the steps completed so far.
    std::optional<std::string> failure;
};

/// Builds the system (fcc lattice filled to n_particles, Maxwell-Boltzmann
/// velocities), runs the untimed equilibration, then times the production
/// steps. Throws ConfigError before allocating anything if the config is
/// invalid.
BenchResult run_benchmark(const BenchConfig& config);

}  // namespace portmd::bench
