#pragma once

#include "portmd/backend/backend.hpp"
#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"
#include "portmd/potential/lennard_jones.hpp"

namespace portmd {

struct NeighborList;

/// Pair forces over every other particle under the minimum-image convention.
///
/// Overwrites `forces` and `potential` (half-share 1/2 U per pair) on the
/// compute side. Throws SingularPairError naming the smallest (i, j) pair at
/// zero separation.
void compute_forces_all_to_all(ParticleState& state, const LJParams& params, const SimBox& box, Backend& backend);

/// Same contract, summing only over the listed neighbors (pairs beyond the
/// cutoff contribute nothing). Throws RebuildRequired if the list overflowed.
void compute_forces_truncated(ParticleState& state, const LJParams& params, const SimBox& box,
                              const NeighborList& nlist, Backend& backend);

}  // namespace portmd
