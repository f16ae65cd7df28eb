#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "portmd/core/types.hpp"
#include "portmd/potential/lennard_jones.hpp"

namespace portmd {

enum class SimdLevel { automatic, scalar, avx2, avx512 };

std::string_view to_string(SimdLevel level) noexcept;
/// Parses "auto", "scalar", "avx2", "avx512". Throws ConfigError otherwise.
SimdLevel parse_simd_level(std::string_view text);

/// Widest level that both the build and the running CPU support.
SimdLevel detect_simd() noexcept;
bool simd_supported(SimdLevel level) noexcept;

struct PeriodicEdges {
    real lx, ly, lz;
    real inv_lx, inv_ly, inv_lz;
};

/// Inputs and outputs of the pair-force kernels, component-major arrays.
struct PairKernelArgs {
    const real* x;
    const real* y;
    const real* z;
    std::size_t n;
    PeriodicEdges box;
    LJCoefficients lj;
    real* fx;
    real* fy;
    real* fz;
    real* epot;
};

/// Fixed-stride neighbor rows; row i holds counts[i] entries starting at i * stride.
struct NeighborRows {
    const std::uint32_t* indices;
    const std::uint32_t* counts;
    std::size_t stride;
};

/// Lexicographically smallest overlapping pair seen by a kernel call, if any.
struct SingularPair {
    bool found = false;
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    void merge(const SingularPair& other) noexcept {
        if (other.found && (!found || other.i < i || (other.i == i && other.j < j))) {
            *this = other;
        }
    }
};

/// v += (f / m) * half_dt for particles [begin, end).
struct KickArgs {
    real* vx;
    real* vy;
    real* vz;
    const real* fx;
    const real* fy;
    const real* fz;
    const real* mass;
    real half_dt;
};

using AllToAllKernel = SingularPair (*)(const PairKernelArgs&, std::size_t begin, std::size_t end);
using NeighborKernel = SingularPair (*)(const PairKernelArgs&, const NeighborRows&, std::size_t begin,
                                        std::size_t end);
using KickKernel = void (*)(const KickArgs&, std::size_t begin, std::size_t end);

/// One implementation of every data-parallel inner loop.
///
/// Every variant processes particle i with the same operation sequence and
/// the same neighbor order as the scalar reference (SIMD lanes run over
/// particles, never over neighbors), so all variants agree bit for bit.
struct KernelTable {
    SimdLevel level;
    AllToAllKernel all_to_all;
    NeighborKernel neighbor;
    KickKernel kick;
};

/// Kernels for a concrete level; `automatic` resolves through detect_simd().
/// Throws ConfigError if the level is unavailable in this build or on this CPU.
const KernelTable& kernel_table(SimdLevel level);

namespace kernels {

SingularPair all_to_all_scalar(const PairKernelArgs& args, std::size_t begin, std::size_t end);
SingularPair neighbor_scalar(const PairKernelArgs& args, const NeighborRows& rows, std::size_t begin,
                             std::size_t end);
void kick_scalar(const KickArgs& args, std::size_t begin, std::size_t end);

#if defined(PORTMD_HAVE_AVX2)
SingularPair all_to_all_avx2(const PairKernelArgs& args, std::size_t begin, std::size_t end);
SingularPair neighbor_avx2(const PairKernelArgs& args, const NeighborRows& rows, std::size_t begin,
                           std::size_t end);
void kick_avx2(const KickArgs& args, std::size_t begin, std::size_t end);
#endif

#if defined(PORTMD_HAVE_AVX512)
SingularPair all_to_all_avx512(const PairKernelArgs& args, std::size_t begin, std::size_t end);
SingularPair neighbor_avx512(const PairKernelArgs& args, const NeighborRows& rows, std::size_t begin,
                             std::size_t end);
void kick_avx512(const KickArgs& args, std::size_t begin, std::size_t end);
#endif

}  // namespace kernels
}  // namespace portmd
