#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"
#include "portmd/neighbor/neighbor_list.hpp"

namespace portmd::verify {

/// Uniform random positions in a cubic box of edge (n / density)^(1/3),
/// rejecting any draw closer than `min_separation` to an earlier particle.
/// Uses its own generator so the oracles share no code with the engine RNG.
std::pair<ParticleState, SimBox> random_configuration(std::size_t n, double density, std::uint64_t seed,
                                                      double min_separation = 0.8);

/// O(n^2) Lennard-Jones forces in long double via std::pow, zero beyond r_cut.
/// Component-major, length 3n.
std::vector<long double> brute_force_forces(ParticleState& state, const SimBox& box, double epsilon, double sigma,
                                            double r_cut);

using PairSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

/// Every pair i < j with minimum-image distance below r_list.
PairSet brute_force_pairs(ParticleState& state, const SimBox& box, double r_list);
/// Pairs stored in a neighbor list, as (min, max).
PairSet listed_pairs(const NeighborList& list);
/// No self entries, no duplicates, and j in row i iff i in row j.
bool is_symmetric(const NeighborList& list);

/// Largest per-component force error, each component scaled by the
/// magnitude of that particle's reference force.
double max_relative_force_error(ParticleState& state, const std::vector<long double>& reference);

}  // namespace portmd::verify
