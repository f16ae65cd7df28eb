#pragma once

#include <cstring>
#include <vector>

#include "portmd/backend/backend.hpp"
#include "portmd/core/particle_state.hpp"
#include "portmd/neighbor/cell_grid.hpp"
#include "portmd/neighbor/neighbor_list.hpp"

namespace portmd::testing {

inline std::vector<real> host_copy(TrackedBuffer<real>& buffer) {
    const auto view = buffer.read(Side::host);
    return {view.begin(), view.end()};
}

inline bool bitwise_equal(const std::vector<real>& a, const std::vector<real>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(real)) == 0;
}

inline NeighborList make_list(ParticleState& state, const SimBox& box, Backend& backend, real r_cut = 2.5,
                              real skin = 0.5, std::size_t stride = 128) {
    NeighborList list(r_cut, skin, stride);
    const CellGrid grid = bin_particles(state, box, list.r_list);
    build_neighbor_list(list, state, box, grid, backend);
    return list;
}

/// Every combination of SIMD level, worker count and chunk size worth comparing.
inline std::vector<BackendSelector> parallel_selectors() {
    std::vector<BackendSelector> out;
    for (SimdLevel level : {SimdLevel::scalar, SimdLevel::avx2, SimdLevel::avx512}) {
        if (!simd_supported(level)) {
            continue;
        }
        for (unsigned workers : {1u, 2u, 3u, 4u, 8u}) {
            for (std::size_t chunk : {std::size_t{7}, std::size_t{256}}) {
                BackendSelector s = BackendSelector::parallel(workers);
                s.simd = level;
                s.chunk_size = chunk;
                out.push_back(s);
            }
        }
    }
    return out;
}

}  // namespace portmd::testing
