#include "portmd/forces/forces.hpp"

#include <mutex>

#include "portmd/core/error.hpp"
#include "portmd/neighbor/neighbor_list.hpp"

namespace portmd {

namespace {

PairKernelArgs make_args(ParticleState& state, const LJParams& params, const SimBox& box) {
    const auto pos = components(state.positions.read(Side::compute));
    const auto force = components(state.forces.write_discard(Side::compute));
    real* epot = state.potential.write_discard(Side::compute).data();
    const Vec3& e = box.edges();
    const Vec3& ie = box.inverse_edges();
    return {pos.x,
            pos.y,
            pos.z,
            state.size(),
            {e.x, e.y, e.z, ie.x, ie.y, ie.z},
            params.coefficients(),
            force.x,
            force.y,
            force.z,
            epot};
}

template <class Kernel>
void run_pair_kernel(Backend& backend, std::size_t n, Kernel&& kernel) {
    SingularPair bad;
    std::mutex mutex;
    backend.for_each_chunk(n, [&](std::size_t, std::size_t begin, std::size_t end) {
        const SingularPair local = kernel(begin, end);
        if (local.found) {
            std::lock_guard lock(mutex);
            bad.merge(local);
        }
    });
    if (bad.found) {
        throw SingularPairError(bad.i, bad.j);
    }
}

}  // namespace

void compute_forces_all_to_all(ParticleState& state, const LJParams& params, const SimBox& box, Backend& backend) {
    const PairKernelArgs args = make_args(state, params, box);
    const AllToAllKernel kernel = backend.kernels().all_to_all;
    run_pair_kernel(backend, state.size(),
                    [&](std::size_t begin, std::size_t end) { return kernel(args, begin, end); });
}

void compute_forces_truncated(ParticleState& state, const LJParams& params, const SimBox& box,
                              const NeighborList& nlist, Backend& backend) {
    if (nlist.overflow) {
        throw RebuildRequired("neighbor list overflowed its stride of " + std::to_string(nlist.stride) +
                              "; rebuild with a larger stride");
    }
    if (nlist.size() != state.size()) {
        throw RebuildRequired("neighbor list was built for a different particle count");
    }
    const PairKernelArgs args = make_args(state, params, box);
    const NeighborRows rows = nlist.rows();
    const NeighborKernel kernel = backend.kernels().neighbor;
    run_pair_kernel(backend, state.size(),
                    [&](std::size_t begin, std::size_t end) { return kernel(args, rows, begin, end); });
}

}  // namespace portmd
