#pragma once

#include <cstdint>
#include <span>

#include "portmd/backend/backend.hpp"
#include "portmd/core/particle_state.hpp"

namespace portmd {

enum class ReduceMode { deterministic, fast };

/// Sum of `values`.
///
/// Deterministic mode evaluates a fixed pairwise tree (halve the range until
/// at most 8 values remain, sum those left to right) whose shape depends
/// only on the length, so the result is bit-identical for any worker count.
/// Fast mode adds per-chunk partial sums in chunk order.
double reduce_sum(std::span<const double> values, ReduceMode mode, Backend* backend = nullptr);
float reduce_sum(std::span<const float> values, ReduceMode mode, Backend* backend = nullptr);

/// Reduction mode that matches the backend's determinism flag.
inline ReduceMode reduce_mode_for(const Backend& backend) noexcept {
    return backend.deterministic() ? ReduceMode::deterministic : ReduceMode::fast;
}

struct KineticSummary {
    real kinetic_energy;
    real temperature;  ///< 2 KE / (3 n), k_B = 1
};

KineticSummary kinetic_energy_and_temperature(ParticleState& state, Backend& backend);
real potential_energy_total(ParticleState& state, Backend& backend);
Vec3 total_momentum(ParticleState& state, Backend& backend);

struct Sample {
    std::uint64_t step = 0;
    real time = 0;
    real potential_energy = 0;
    real kinetic_energy = 0;
    real total_energy = 0;
    real temperature = 0;
    Vec3 total_momentum;
    std::uint64_t rebuild_count = 0;

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Evaluates every observable of `state` into one sample.
Sample take_sample(ParticleState& state, Backend& backend, std::uint64_t step, real dt, std::uint64_t rebuild_count);

}  // namespace portmd
