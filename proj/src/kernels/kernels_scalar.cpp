// Scalar reference kernels. One particle per iteration of the outer loop,
// neighbors in list order; the SIMD variants must reproduce this exactly.

#include "portmd/backend/kernels.hpp"
#include "portmd/core/box.hpp"

namespace portmd::kernels {

namespace {

struct Accumulator {
    real fx = 0, fy = 0, fz = 0, u = 0;
};

inline void accumulate_pair(Accumulator& acc, SingularPair& bad, const PairKernelArgs& a, std::size_t i,
                            std::size_t j, real xi, real yi, real zi) {
    real dx = xi - a.x[j];
    real dy = yi - a.y[j];
    real dz = zi - a.z[j];
    dx = dx - a.box.lx * nearest_integer(dx * a.box.inv_lx);
    dy = dy - a.box.ly * nearest_integer(dy * a.box.inv_ly);
    dz = dz - a.box.lz * nearest_integer(dz * a.box.inv_lz);
    const real r2 = dx * dx + dy * dy + dz * dz;
    if (r2 == 0) {
        bad.merge({true, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    if (r2 < a.lj.rc2) {
        const PairTerms t = lj_pair(r2, a.lj);
        acc.fx = acc.fx + t.force_over_r * dx;
        acc.fy = acc.fy + t.force_over_r * dy;
        acc.fz = acc.fz + t.force_over_r * dz;
        acc.u = acc.u + t.energy;
    }
}

inline void store(const PairKernelArgs& a, std::size_t i, const Accumulator& acc) {
    a.fx[i] = acc.fx;
    a.fy[i] = acc.fy;
    a.fz[i] = acc.fz;
    a.epot[i] = real(0.5) * acc.u;
}

}  // namespace

SingularPair all_to_all_scalar(const PairKernelArgs& a, std::size_t begin, std::size_t end) {
    SingularPair bad;
    for (std::size_t i = begin; i < end; ++i) {
        const real xi = a.x[i], yi = a.y[i], zi = a.z[i];
        Accumulator acc;
        for (std::size_t j = 0; j < a.n; ++j) {
            if (j != i) {
                accumulate_pair(acc, bad, a, i, j, xi, yi, zi);
            }
        }
        store(a, i, acc);
    }
    return bad;
}

SingularPair neighbor_scalar(const PairKernelArgs& a, const NeighborRows& rows, std::size_t begin,
                             std::size_t end) {
    SingularPair bad;
    for (std::size_t i = begin; i < end; ++i) {
        const real xi = a.x[i], yi = a.y[i], zi = a.z[i];
        const std::uint32_t* row = rows.indices + i * rows.stride;
        const std::uint32_t count = rows.counts[i];
        Accumulator acc;
        for (std::uint32_t s = 0; s < count; ++s) {
            accumulate_pair(acc, bad, a, i, row[s], xi, yi, zi);
        }
        store(a, i, acc);
    }
    return bad;
}

void kick_scalar(const KickArgs& a, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
        const real m = a.mass[i];
        a.vx[i] = a.vx[i] + (a.fx[i] / m) * a.half_dt;
        a.vy[i] = a.vy[i] + (a.fy[i] / m) * a.half_dt;
        a.vz[i] = a.vz[i] + (a.fz[i] / m) * a.half_dt;
    }
}

}  // namespace portmd::kernels
