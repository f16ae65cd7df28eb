#pragma once

#include <cstddef>
#include <cstdint>

#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"

namespace portmd {

struct InitialSystem {
    ParticleState state;
    SimBox box;
};

/// Nearest particle count of the form 4 k^3 (ties go to the larger one).
std::size_t nearest_fcc_count(std::size_t n);

/// n = 4 k^3 particles on a complete fcc lattice in a cubic box of edge
/// (n / density)^(1/3). Throws DomainError naming the nearest valid count
/// when n is not of that form, or if density <= 0.
InitialSystem init_lattice(std::size_t n, real density);

/// Any n >= 1: the first n sites of the smallest fcc lattice with at least
/// n sites, in a cubic box of edge (n / density)^(1/3).
InitialSystem init_lattice_filled(std::size_t n, real density);

/// Maxwell-Boltzmann velocities with zero total momentum, rescaled so the
/// instantaneous temperature 2 KE / (3 n) equals `temperature` exactly.
/// Throws DomainError for a negative temperature.
void init_velocities(ParticleState& state, real temperature, std::uint64_t seed);

}  // namespace portmd
