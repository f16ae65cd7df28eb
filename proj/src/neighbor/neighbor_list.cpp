#include "portmd/neighbor/neighbor_list.hpp"

#include <algorithm>
#include <string>

#include "portmd/core/error.hpp"

namespace portmd {

NeighborList::NeighborList(real r_cut_, real skin_, std::size_t stride_)
    : r_cut(r_cut_), r_list(r_cut_ + skin_), stride(stride_) {
    if (!(r_cut_ > 0) || !(skin_ >= 0)) {
        throw DomainError("neighbor list needs r_cut > 0 and skin >= 0");
    }
    if (stride_ < 1) {
        throw DomainError("neighbor list stride must be at least 1");
    }
}

namespace {

struct ChunkStatus {
    bool overflow = false;
    std::size_t max_row = 0;
};

}  // namespace

void build_neighbor_list(NeighborList& list, ParticleState& state, const SimBox& box, const CellGrid& grid,
                         Backend& backend) {
    if (list.stride < 1) {
        throw DomainError("neighbor list stride must be at least 1");
    }
    for (int a = 0; a < 3; ++a) {
        if (grid.cell_edge[a] < list.r_list) {
            throw DomainError("cell edge " + std::to_string(grid.cell_edge[a]) + " is smaller than the list radius " +
                              std::to_string(list.r_list));
        }
    }
    const std::size_t n = state.size();
    const auto pos = components(state.positions.read(Side::compute));
    const real r_list2 = list.r_list * list.r_list;
    const bool sort_rows = backend.deterministic();

    list.indices.assign(n * list.stride, 0);
    list.counts.assign(n, 0);
    std::vector<ChunkStatus> status(backend.chunk_count(n));

    const auto nx = grid.cells_per_axis[0], ny = grid.cells_per_axis[1], nz = grid.cells_per_axis[2];

    backend.for_each_chunk(n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> candidates;
        ChunkStatus local;
        auto consider = [&](std::size_t i, std::uint32_t j, Vec3 ri) {
            if (j == i) {
                return;
            }
            const Vec3 dr = box.minimum_image(ri - Vec3{pos.x[j], pos.y[j], pos.z[j]});
            if (dot(dr, dr) < r_list2) {
                candidates.push_back(j);
            }
        };
        for (std::size_t i = begin; i < end; ++i) {
            candidates.clear();
            const Vec3 ri{pos.x[i], pos.y[i], pos.z[i]};
            if (grid.fallback) {
                for (std::uint32_t j = 0; j < n; ++j) {
                    consider(i, j, ri);
                }
            } else {
                const std::uint32_t cell = grid.cell_of_particle[i];
                const std::uint32_t cz = cell % nz;
                const std::uint32_t cy = (cell / nz) % ny;
                const std::uint32_t cx = cell / (nz * ny);
                for (std::uint32_t ox = 0; ox < 3; ++ox) {
                    for (std::uint32_t oy = 0; oy < 3; ++oy) {
                        for (std::uint32_t oz = 0; oz < 3; ++oz) {
                            const std::uint32_t neighbor_cell =
                                grid.flat_index((cx + nx + ox - 1) % nx, (cy + ny + oy - 1) % ny, (cz + nz + oz - 1) % nz);
                            for (std::uint32_t j : grid.occupants(neighbor_cell)) {
                                consider(i, j, ri);
                            }
                        }
                    }
                }
            }
            if (sort_rows) {
                std::sort(candidates.begin(), candidates.end());
            }
            local.max_row = std::max(local.max_row, candidates.size());
            if (candidates.size() > list.stride) {
                local.overflow = true;
            }
            const std::size_t kept = std::min(candidates.size(), list.stride);
            std::copy_n(candidates.begin(), kept, list.indices.begin() + static_cast<std::ptrdiff_t>(i * list.stride));
            list.counts[i] = static_cast<std::uint32_t>(kept);
        }
        status[chunk] = local;
    });

    list.overflow = false;
    list.max_row_length = 0;
    for (const auto& s : status) {
        list.overflow = list.overflow || s.overflow;
        list.max_row_length = std::max(list.max_row_length, s.max_row);
    }
    list.positions_at_build = state.unwrapped_positions(box);
    ++list.rebuild_count;
}

bool needs_rebuild(ParticleState& state, const SimBox& box, const NeighborList& list, Backend& backend) {
    const std::size_t n = state.size();
    if (list.positions_at_build.size() != 3 * n) {
        return true;
    }
    if (n == 0) {
        return false;
    }
    const auto pos = components(state.positions.read(Side::compute));
    const auto img = components(state.images.read(Side::compute));
    const real* ref = list.positions_at_build.data();
    const Vec3& edges = box.edges();
    const real half_skin = real(0.5) * list.skin();
    const real threshold2 = half_skin * half_skin;

    std::vector<real> chunk_max(backend.chunk_count(n), 0);
    backend.for_each_chunk(n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        real largest = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const real dx = pos.x[i] + static_cast<real>(img.x[i]) * edges.x - ref[i];
            const real dy = pos.y[i] + static_cast<real>(img.y[i]) * edges.y - ref[n + i];
            const real dz = pos.z[i] + static_cast<real>(img.z[i]) * edges.z - ref[2 * n + i];
            largest = std::max(largest, dx * dx + dy * dy + dz * dz);
        }
        chunk_max[chunk] = largest;
    });
    return *std::max_element(chunk_max.begin(), chunk_max.end()) > threshold2;
}

}  // namespace portmd
