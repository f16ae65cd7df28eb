// AVX2 kernels: four particles per vector, one lane each. Lanes walk their
// neighbors in the same order as the scalar loop and masked-off lanes keep
// their accumulators untouched, which keeps results bitwise identical to
// kernels_scalar.cpp.

#include <immintrin.h>

#include <algorithm>

#include "portmd/backend/kernels.hpp"

namespace portmd::kernels {

namespace {

constexpr std::size_t width = 4;

struct Constants {
    __m256d lx, ly, lz, ilx, ily, ilz;
    __m256d sigma2, eps4, eps48, shift, rc2;
    __m256d one, half, zero;

    explicit Constants(const PairKernelArgs& a)
        : lx(_mm256_set1_pd(a.box.lx)),
          ly(_mm256_set1_pd(a.box.ly)),
          lz(_mm256_set1_pd(a.box.lz)),
          ilx(_mm256_set1_pd(a.box.inv_lx)),
          ily(_mm256_set1_pd(a.box.inv_ly)),
          ilz(_mm256_set1_pd(a.box.inv_lz)),
          sigma2(_mm256_set1_pd(a.lj.sigma2)),
          eps4(_mm256_set1_pd(a.lj.eps4)),
          eps48(_mm256_set1_pd(a.lj.eps48)),
          shift(_mm256_set1_pd(a.lj.shift)),
          rc2(_mm256_set1_pd(a.lj.rc2)),
          one(_mm256_set1_pd(1.0)),
          half(_mm256_set1_pd(0.5)),
          zero(_mm256_setzero_pd()) {}
};

inline __m256d wrap_component(__m256d d, __m256d edge, __m256d inv_edge) {
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(d, inv_edge), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    return _mm256_sub_pd(d, _mm256_mul_pd(edge, k));
}

struct Lanes {
    __m256d xi, yi, zi;
    __m256d fx, fy, fz, u;
};

/// Adds the pair terms for (lane particle, xj/yj/zj) on lanes selected by `valid`.
inline void accumulate(Lanes& l, const Constants& c, __m256d xj, __m256d yj, __m256d zj, __m256d valid,
                       SingularPair& bad, std::size_t i0, const std::uint32_t* j_of_lane) {
    const __m256d dx = wrap_component(_mm256_sub_pd(l.xi, xj), c.lx, c.ilx);
    const __m256d dy = wrap_component(_mm256_sub_pd(l.yi, yj), c.ly, c.ily);
    const __m256d dz = wrap_component(_mm256_sub_pd(l.zi, zj), c.lz, c.ilz);
    const __m256d r2 =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));

    const int singular = _mm256_movemask_pd(_mm256_and_pd(valid, _mm256_cmp_pd(r2, c.zero, _CMP_EQ_OQ)));
    if (singular != 0) {
        for (std::size_t k = 0; k < width; ++k) {
            if (singular & (1 << k)) {
                bad.merge({true, static_cast<std::uint32_t>(i0 + k), j_of_lane[k]});
            }
        }
    }

    const __m256d mask = _mm256_and_pd(valid, _mm256_cmp_pd(r2, c.rc2, _CMP_LT_OQ));
    if (_mm256_movemask_pd(mask) == 0) {
        return;
    }
    const __m256d inv_r2 = _mm256_div_pd(c.one, r2);
    const __m256d sr2 = _mm256_mul_pd(c.sigma2, inv_r2);
    const __m256d sr6 = _mm256_mul_pd(_mm256_mul_pd(sr2, sr2), sr2);
    const __m256d fr =
        _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(c.eps48, sr6), _mm256_sub_pd(sr6, c.half)), inv_r2);
    const __m256d u =
        _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(c.eps4, sr6), _mm256_sub_pd(sr6, c.one)), c.shift);

    l.fx = _mm256_blendv_pd(l.fx, _mm256_add_pd(l.fx, _mm256_mul_pd(fr, dx)), mask);
    l.fy = _mm256_blendv_pd(l.fy, _mm256_add_pd(l.fy, _mm256_mul_pd(fr, dy)), mask);
    l.fz = _mm256_blendv_pd(l.fz, _mm256_add_pd(l.fz, _mm256_mul_pd(fr, dz)), mask);
    l.u = _mm256_blendv_pd(l.u, _mm256_add_pd(l.u, u), mask);
}

inline Lanes load_lanes(const PairKernelArgs& a, std::size_t i0) {
    const __m256d zero = _mm256_setzero_pd();
    return {_mm256_loadu_pd(a.x + i0), _mm256_loadu_pd(a.y + i0), _mm256_loadu_pd(a.z + i0), zero, zero, zero, zero};
}

inline void store_lanes(const PairKernelArgs& a, const Constants& c, std::size_t i0, const Lanes& l) {
    _mm256_storeu_pd(a.fx + i0, l.fx);
    _mm256_storeu_pd(a.fy + i0, l.fy);
    _mm256_storeu_pd(a.fz + i0, l.fz);
    _mm256_storeu_pd(a.epot + i0, _mm256_mul_pd(c.half, l.u));
}

}  // namespace

SingularPair all_to_all_avx2(const PairKernelArgs& a, std::size_t begin, std::size_t end) {
    const Constants c(a);
    SingularPair bad;
    std::size_t i0 = begin;
    for (; i0 + width <= end; i0 += width) {
        Lanes l = load_lanes(a, i0);
        const __m256i lane_index = _mm256_setr_epi64x(static_cast<long long>(i0), static_cast<long long>(i0 + 1),
                                                      static_cast<long long>(i0 + 2), static_cast<long long>(i0 + 3));
        for (std::size_t j = 0; j < a.n; ++j) {
            const __m256d not_self = _mm256_castsi256_pd(_mm256_xor_si256(
                _mm256_cmpeq_epi64(lane_index, _mm256_set1_epi64x(static_cast<long long>(j))),
                _mm256_set1_epi64x(-1)));
            const std::uint32_t jj = static_cast<std::uint32_t>(j);
            const std::uint32_t j_of_lane[width] = {jj, jj, jj, jj};
            accumulate(l, c, _mm256_broadcast_sd(a.x + j), _mm256_broadcast_sd(a.y + j), _mm256_broadcast_sd(a.z + j),
                       not_self, bad, i0, j_of_lane);
        }
        store_lanes(a, c, i0, l);
    }
    if (i0 < end) {
        bad.merge(all_to_all_scalar(a, i0, end));
    }
    return bad;
}

SingularPair neighbor_avx2(const PairKernelArgs& a, const NeighborRows& rows, std::size_t begin, std::size_t end) {
    const Constants c(a);
    SingularPair bad;
    const int stride = static_cast<int>(rows.stride);
    const __m128i row_offsets = _mm_setr_epi32(0, stride, 2 * stride, 3 * stride);
    std::size_t i0 = begin;
    for (; i0 + width <= end; i0 += width) {
        Lanes l = load_lanes(a, i0);
        const __m128i counts = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rows.counts + i0));
        const std::uint32_t max_count = std::max({rows.counts[i0], rows.counts[i0 + 1], rows.counts[i0 + 2],
                                                  rows.counts[i0 + 3]});
        const std::uint32_t* base = rows.indices + i0 * rows.stride;
        const __m128i self = _mm_setr_epi32(static_cast<int>(i0), static_cast<int>(i0 + 1), static_cast<int>(i0 + 2),
                                            static_cast<int>(i0 + 3));
        for (std::uint32_t s = 0; s < max_count; ++s) {
            const __m128i active = _mm_cmpgt_epi32(counts, _mm_set1_epi32(static_cast<int>(s)));
            const __m128i j = _mm_mask_i32gather_epi32(self, reinterpret_cast<const int*>(base + s), row_offsets,
                                                       active, 4);
            const __m256d valid = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(active));
            alignas(16) std::uint32_t j_of_lane[width];
            _mm_store_si128(reinterpret_cast<__m128i*>(j_of_lane), j);
            accumulate(l, c, _mm256_i32gather_pd(a.x, j, 8), _mm256_i32gather_pd(a.y, j, 8),
                       _mm256_i32gather_pd(a.z, j, 8), valid, bad, i0, j_of_lane);
        }
        store_lanes(a, c, i0, l);
    }
    if (i0 < end) {
        bad.merge(neighbor_scalar(a, rows, i0, end));
    }
    return bad;
}

void kick_avx2(const KickArgs& a, std::size_t begin, std::size_t end) {
    const __m256d h = _mm256_set1_pd(a.half_dt);
    std::size_t i = begin;
    for (; i + width <= end; i += width) {
        const __m256d m = _mm256_loadu_pd(a.mass + i);
        _mm256_storeu_pd(a.vx + i, _mm256_add_pd(_mm256_loadu_pd(a.vx + i),
                                                 _mm256_mul_pd(_mm256_div_pd(_mm256_loadu_pd(a.fx + i), m), h)));
        _mm256_storeu_pd(a.vy + i, _mm256_add_pd(_mm256_loadu_pd(a.vy + i),
                                                 _mm256_mul_pd(_mm256_div_pd(_mm256_loadu_pd(a.fy + i), m), h)));
        _mm256_storeu_pd(a.vz + i, _mm256_add_pd(_mm256_loadu_pd(a.vz + i),
                                                 _mm256_mul_pd(_mm256_div_pd(_mm256_loadu_pd(a.fz + i), m), h)));
    }
    if (i < end) {
        kick_scalar(a, i, end);
    }
}

}  // namespace portmd::kernels
