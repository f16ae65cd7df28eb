#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"

namespace portmd {

/// Particles binned into cells of edge >= the list radius.
///
/// Cells are flattened x-major: ((cx * ny) + cy) * nz + cz. Occupants of a
/// cell are stored contiguously (CSR) in ascending particle index.
struct CellGrid {
    std::array<std::uint32_t, 3> cells_per_axis{};
    Vec3 cell_edge{};
    Vec3 box_edges{};
    std::vector<std::uint32_t> cell_of_particle;
    std::vector<std::uint32_t> cell_offsets;  ///< size cell_count() + 1
    std::vector<std::uint32_t> cell_occupants;
    /// Some axis has fewer than 3 cells; the 27-cell stencil would visit a
    /// cell twice there, so list construction scans all pairs instead.
    bool fallback = false;

    std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(cells_per_axis[0]) * cells_per_axis[1] * cells_per_axis[2];
    }
    std::uint32_t flat_index(std::uint32_t cx, std::uint32_t cy, std::uint32_t cz) const noexcept {
        return (cx * cells_per_axis[1] + cy) * cells_per_axis[2] + cz;
    }
    std::span<const std::uint32_t> occupants(std::size_t cell) const noexcept {
        return {cell_occupants.data() + cell_offsets[cell], cell_offsets[cell + 1] - cell_offsets[cell]};
    }
    std::vector<std::uint32_t> occupancy_counts() const;
};

/// Bins particles by position: cells_per_axis = floor(L / r_list), cell index
/// floor(r / cell_edge) clamped to the last cell. Throws DomainError if
/// r_list <= 0 or some box edge is shorter than r_list.
CellGrid bin_particles(ParticleState& state, const SimBox& box, real r_list);

/// Stable sort of the particles by flattened cell index. Every particle
/// array is permuted; the returned order maps new slot k to old index
/// order[k]. The grid is stale afterwards.
std::vector<std::uint32_t> reorder_by_cell(ParticleState& state, const CellGrid& grid);

}  // namespace portmd
