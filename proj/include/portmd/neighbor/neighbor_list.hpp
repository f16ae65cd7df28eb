#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "portmd/backend/backend.hpp"
#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"
#include "portmd/neighbor/cell_grid.hpp"

namespace portmd {

/// Full (symmetric) Verlet neighbor list with a fixed stride per particle.
///
/// Every unordered pair closer than r_list = r_cut + skin appears in both
/// rows. Rows never contain the particle itself or duplicates. When a row
/// would exceed the stride, `overflow` is set and the row is cut at the
/// stride; such a list must not be used for forces.
struct NeighborList {
    NeighborList(real r_cut, real skin, std::size_t stride);

    real r_cut;
    real r_list;
    std::size_t stride;
    std::vector<std::uint32_t> indices;  ///< n * stride
    std::vector<std::uint32_t> counts;   ///< n
    bool overflow = false;
    /// Largest row length seen at the last build, including cut entries.
    std::size_t max_row_length = 0;
    std::vector<real> positions_at_build;  ///< unwrapped, component-major
    std::uint64_t rebuild_count = 0;

    real skin() const noexcept { return r_list - r_cut; }
    std::size_t size() const noexcept { return counts.size(); }
    std::span<const std::uint32_t> row(std::size_t i) const noexcept {
        return {indices.data() + i * stride, counts[i]};
    }
    NeighborRows rows() const noexcept { return {indices.data(), counts.data(), stride}; }
};

/// Rebuilds `list` from a grid binned at the current positions.
///
/// Scans the 27 cells around each particle (all particles when the grid is
/// in fallback mode). Rows are sorted by ascending index when the backend is
/// deterministic. Snapshots unwrapped positions and bumps rebuild_count.
/// Throws DomainError if the stride is zero or the grid radius is smaller
/// than the list radius.
void build_neighbor_list(NeighborList& list, ParticleState& state, const SimBox& box, const CellGrid& grid,
                         Backend& backend);

/// True iff some particle moved more than skin/2 (unwrapped) since the list
/// was built.
bool needs_rebuild(ParticleState& state, const SimBox& box, const NeighborList& list, Backend& backend);

}  // namespace portmd
