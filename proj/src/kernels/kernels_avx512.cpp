// AVX-512F kernels: eight particles per vector, one lane each. Same
// lane-per-particle scheme as the AVX2 variant, with mask registers.

#include <immintrin.h>

#include <algorithm>

#include "portmd/backend/kernels.hpp"

namespace portmd::kernels {

namespace {

constexpr std::size_t width = 8;

struct Constants {
    __m512d lx, ly, lz, ilx, ily, ilz;
    __m512d sigma2, eps4, eps48, shift, rc2;
    __m512d one, half, zero;

    explicit Constants(const PairKernelArgs& a)
        : lx(_mm512_set1_pd(a.box.lx)),
          ly(_mm512_set1_pd(a.box.ly)),
          lz(_mm512_set1_pd(a.box.lz)),
          ilx(_mm512_set1_pd(a.box.inv_lx)),
          ily(_mm512_set1_pd(a.box.inv_ly)),
          ilz(_mm512_set1_pd(a.box.inv_lz)),
          sigma2(_mm512_set1_pd(a.lj.sigma2)),
          eps4(_mm512_set1_pd(a.lj.eps4)),
          eps48(_mm512_set1_pd(a.lj.eps48)),
          shift(_mm512_set1_pd(a.lj.shift)),
          rc2(_mm512_set1_pd(a.lj.rc2)),
          one(_mm512_set1_pd(1.0)),
          half(_mm512_set1_pd(0.5)),
          zero(_mm512_setzero_pd()) {}
};

inline __m512d wrap_component(__m512d d, __m512d edge, __m512d inv_edge) {
    const __m512d k = _mm512_roundscale_pd(_mm512_mul_pd(d, inv_edge), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    return _mm512_sub_pd(d, _mm512_mul_pd(edge, k));
}

struct Lanes {
    __m512d xi, yi, zi;
    __m512d fx, fy, fz, u;
};

inline void accumulate(Lanes& l, const Constants& c, __m512d xj, __m512d yj, __m512d zj, __mmask8 valid,
                       SingularPair& bad, std::size_t i0, const std::uint32_t* j_of_lane) {
    const __m512d dx = wrap_component(_mm512_sub_pd(l.xi, xj), c.lx, c.ilx);
    const __m512d dy = wrap_component(_mm512_sub_pd(l.yi, yj), c.ly, c.ily);
    const __m512d dz = wrap_component(_mm512_sub_pd(l.zi, zj), c.lz, c.ilz);
    const __m512d r2 =
        _mm512_add_pd(_mm512_add_pd(_mm512_mul_pd(dx, dx), _mm512_mul_pd(dy, dy)), _mm512_mul_pd(dz, dz));

    const __mmask8 singular = _mm512_mask_cmp_pd_mask(valid, r2, c.zero, _CMP_EQ_OQ);
    if (singular != 0) {
        for (std::size_t k = 0; k < width; ++k) {
            if (singular & (1u << k)) {
                bad.merge({true, static_cast<std::uint32_t>(i0 + k), j_of_lane[k]});
            }
        }
    }

    const __mmask8 mask = _mm512_mask_cmp_pd_mask(valid, r2, c.rc2, _CMP_LT_OQ);
    if (mask == 0) {
        return;
    }
    const __m512d inv_r2 = _mm512_div_pd(c.one, r2);
    const __m512d sr2 = _mm512_mul_pd(c.sigma2, inv_r2);
    const __m512d sr6 = _mm512_mul_pd(_mm512_mul_pd(sr2, sr2), sr2);
    const __m512d fr =
        _mm512_mul_pd(_mm512_mul_pd(_mm512_mul_pd(c.eps48, sr6), _mm512_sub_pd(sr6, c.half)), inv_r2);
    const __m512d u =
        _mm512_add_pd(_mm512_mul_pd(_mm512_mul_pd(c.eps4, sr6), _mm512_sub_pd(sr6, c.one)), c.shift);

    l.fx = _mm512_mask_add_pd(l.fx, mask, l.fx, _mm512_mul_pd(fr, dx));
    l.fy = _mm512_mask_add_pd(l.fy, mask, l.fy, _mm512_mul_pd(fr, dy));
    l.fz = _mm512_mask_add_pd(l.fz, mask, l.fz, _mm512_mul_pd(fr, dz));
    l.u = _mm512_mask_add_pd(l.u, mask, l.u, u);
}

inline Lanes load_lanes(const PairKernelArgs& a, std::size_t i0) {
    const __m512d zero = _mm512_setzero_pd();
    return {_mm512_loadu_pd(a.x + i0), _mm512_loadu_pd(a.y + i0), _mm512_loadu_pd(a.z + i0), zero, zero, zero, zero};
}

inline void store_lanes(const PairKernelArgs& a, const Constants& c, std::size_t i0, const Lanes& l) {
    _mm512_storeu_pd(a.fx + i0, l.fx);
    _mm512_storeu_pd(a.fy + i0, l.fy);
    _mm512_storeu_pd(a.fz + i0, l.fz);
    _mm512_storeu_pd(a.epot + i0, _mm512_mul_pd(c.half, l.u));
}

}  // namespace

SingularPair all_to_all_avx512(const PairKernelArgs& a, std::size_t begin, std::size_t end) {
    const Constants c(a);
    SingularPair bad;
    std::size_t i0 = begin;
    for (; i0 + width <= end; i0 += width) {
        Lanes l = load_lanes(a, i0);
        const __m512i lane_index = _mm512_add_epi64(_mm512_set1_epi64(static_cast<long long>(i0)),
                                                    _mm512_setr_epi64(0, 1, 2, 3, 4, 5, 6, 7));
        for (std::size_t j = 0; j < a.n; ++j) {
            const __mmask8 not_self =
                _mm512_cmpneq_epi64_mask(lane_index, _mm512_set1_epi64(static_cast<long long>(j)));
            const std::uint32_t jj = static_cast<std::uint32_t>(j);
            const std::uint32_t j_of_lane[width] = {jj, jj, jj, jj, jj, jj, jj, jj};
            accumulate(l, c, _mm512_set1_pd(a.x[j]), _mm512_set1_pd(a.y[j]), _mm512_set1_pd(a.z[j]), not_self, bad,
                       i0, j_of_lane);
        }
        store_lanes(a, c, i0, l);
    }
    if (i0 < end) {
        bad.merge(all_to_all_scalar(a, i0, end));
    }
    return bad;
}

SingularPair neighbor_avx512(const PairKernelArgs& a, const NeighborRows& rows, std::size_t begin,
                             std::size_t end) {
    const Constants c(a);
    SingularPair bad;
    const int stride = static_cast<int>(rows.stride);
    const __m256i row_offsets = _mm256_mullo_epi32(_mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7), _mm256_set1_epi32(stride));
    std::size_t i0 = begin;
    for (; i0 + width <= end; i0 += width) {
        Lanes l = load_lanes(a, i0);
        const __m256i counts = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.counts + i0));
        const std::uint32_t max_count = *std::max_element(rows.counts + i0, rows.counts + i0 + width);
        const std::uint32_t* base = rows.indices + i0 * rows.stride;
        const __m256i self = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(i0)),
                                              _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
        for (std::uint32_t s = 0; s < max_count; ++s) {
            const __m256i active = _mm256_cmpgt_epi32(counts, _mm256_set1_epi32(static_cast<int>(s)));
            const __m256i j =
                _mm256_mask_i32gather_epi32(self, reinterpret_cast<const int*>(base + s), row_offsets, active, 4);
            const auto valid = static_cast<__mmask8>(_mm256_movemask_ps(_mm256_castsi256_ps(active)));
            alignas(32) std::uint32_t j_of_lane[width];
            _mm256_store_si256(reinterpret_cast<__m256i*>(j_of_lane), j);
            accumulate(l, c, _mm512_i32gather_pd(j, a.x, 8), _mm512_i32gather_pd(j, a.y, 8),
                       _mm512_i32gather_pd(j, a.z, 8), valid, bad, i0, j_of_lane);
        }
        store_lanes(a, c, i0, l);
    }
    if (i0 < end) {
        bad.merge(neighbor_scalar(a, rows, i0, end));
    }
    return bad;
}

void kick_avx512(const KickArgs& a, std::size_t begin, std::size_t end) {
    const __m512d h = _mm512_set1_pd(a.half_dt);
    std::size_t i = begin;
    for (; i + width <= end; i += width) {
        const __m512d m = _mm512_loadu_pd(a.mass + i);
        _mm512_storeu_pd(a.vx + i, _mm512_add_pd(_mm512_loadu_pd(a.vx + i),
                                                 _mm512_mul_pd(_mm512_div_pd(_mm512_loadu_pd(a.fx + i), m), h)));
        _mm512_storeu_pd(a.vy + i, _mm512_add_pd(_mm512_loadu_pd(a.vy + i),
                                                 _mm512_mul_pd(_mm512_div_pd(_mm512_loadu_pd(a.fy + i), m), h)));
        _mm512_storeu_pd(a.vz + i, _mm512_add_pd(_mm512_loadu_pd(a.vz + i),
                                                 _mm512_mul_pd(_mm512_div_pd(_mm512_loadu_pd(a.fz + i), m), h)));
    }
    if (i < end) {
        kick_scalar(a, i, end);
    }
}

}  // namespace portmd::kernels
