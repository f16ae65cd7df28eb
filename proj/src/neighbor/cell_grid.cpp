#include "portmd/neighbor/cell_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "portmd/core/error.hpp"

namespace portmd {

std::vector<std::uint32_t> CellGrid::occupancy_counts() const {
    std::vector<std::uint32_t> counts(cell_count());
    for (std::size_t c = 0; c < counts.size(); ++c) {
        counts[c] = cell_offsets[c + 1] - cell_offsets[c];
    }
    return counts;
}

CellGrid bin_particles(ParticleState& state, const SimBox& box, real r_list) {
    if (!(r_list > 0)) {
        throw DomainError("list radius must be positive, got " + std::to_string(r_list));
    }
    CellGrid grid;
    grid.box_edges = box.edges();
    for (int a = 0; a < 3; ++a) {
        const real edge = box.edges()[a];
        auto cells = static_cast<std::uint32_t>(std::floor(edge / r_list));
        // rounding in edge / cells must not leave a cell narrower than r_list
        while (cells > 1 && edge / static_cast<real>(cells) < r_list) {
            --cells;
        }
        if (cells < 1 || edge < r_list) {
            throw DomainError("box edge " + std::to_string(edge) + " is shorter than the list radius " +
                              std::to_string(r_list));
        }
        grid.cells_per_axis[static_cast<std::size_t>(a)] = cells;
        grid.cell_edge[a] = edge / static_cast<real>(cells);
        grid.fallback = grid.fallback || cells < 3;
    }

    const std::size_t n = state.size();
    const auto pos = components(state.positions.read(Side::compute));
    grid.cell_of_particle.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t c[3];
        const real r[3] = {pos.x[i], pos.y[i], pos.z[i]};
        for (int a = 0; a < 3; ++a) {
            const auto last = grid.cells_per_axis[static_cast<std::size_t>(a)] - 1;
            const real scaled = std::floor(r[a] / grid.cell_edge[a]);
            c[a] = scaled <= 0 ? 0u : std::min(static_cast<std::uint32_t>(scaled), last);
        }
        grid.cell_of_particle[i] = grid.flat_index(c[0], c[1], c[2]);
    }

    // counting sort keeps occupants in ascending particle order
    grid.cell_offsets.assign(grid.cell_count() + 1, 0);
    for (std::uint32_t cell : grid.cell_of_particle) {
        ++grid.cell_offsets[cell + 1];
    }
    std::partial_sum(grid.cell_offsets.begin(), grid.cell_offsets.end(), grid.cell_offsets.begin());
    grid.cell_occupants.resize(n);
    std::vector<std::uint32_t> fill(grid.cell_offsets.begin(), grid.cell_offsets.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        grid.cell_occupants[fill[grid.cell_of_particle[i]]++] = static_cast<std::uint32_t>(i);
    }
    return grid;
}

std::vector<std::uint32_t> reorder_by_cell(ParticleState& state, const CellGrid& grid) {
    std::vector<std::uint32_t> order(state.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return grid.cell_of_particle[a] < grid.cell_of_particle[b];
    });
    state.permute(order);
    return order;
}

}  // namespace portmd
