#pragma once

#include <cmath>
#include <utility>

#include "portmd/core/types.hpp"

namespace portmd {

/// Round to the nearest integer, ties to even.
///
/// Uses the add-and-subtract-2^52 idiom so the scalar path needs no SSE4.1
/// `roundsd`; the result is bit-identical to `_mm256_round_pd(x, _MM_FROUND_TO_NEAREST_INT)`
/// which the SIMD kernels use.
inline real nearest_integer(real x) noexcept {
#if defined(PORTMD_SINGLE_PRECISION)
    constexpr real magic = 12582912.0f;  // 1.5 * 2^23
    constexpr real limit = 4194304.0f;   // 2^22
#else
    constexpr real magic = 6755399441055744.0;  // 1.5 * 2^52
    constexpr real limit = 2251799813685248.0;  // 2^51
#endif
    if (!(std::fabs(x) < limit)) {
        return std::nearbyint(x);
    }
    const real shifted = x + magic;
    return shifted - magic;
}

/// Orthorhombic periodic simulation box.
class SimBox {
public:
    /// Throws DomainError unless every edge is strictly positive and finite.
    explicit SimBox(Vec3 edges);

    static SimBox cubic(real edge) { return SimBox(Vec3{edge, edge, edge}); }

    const Vec3& edges() const noexcept { return edges_; }
    const Vec3& inverse_edges() const noexcept { return inverse_edges_; }
    real volume() const noexcept { return edges_.x * edges_.y * edges_.z; }
    real smallest_edge() const noexcept;

    /// dr - L * round(dr / L) per axis; each result component has magnitude <= L/2.
    Vec3 minimum_image(Vec3 dr) const noexcept {
        for (int a = 0; a < 3; ++a) {
            dr[a] -= edges_[a] * nearest_integer(dr[a] * inverse_edges_[a]);
        }
        return dr;
    }

    /// Brings a position into [0, L) per axis and moves the image count so
    /// that the unwrapped position stays put.
    std::pair<Vec3, IVec3> wrap(Vec3 r, IVec3 image) const noexcept;

    Vec3 unwrap(Vec3 r, IVec3 image) const noexcept {
        return {r.x + static_cast<real>(image.x) * edges_.x, r.y + static_cast<real>(image.y) * edges_.y,
                r.z + static_cast<real>(image.z) * edges_.z};
    }

private:
    Vec3 edges_;
    Vec3 inverse_edges_;
};

inline Vec3 minimum_image(Vec3 dr, const SimBox& box) noexcept { return box.minimum_image(dr); }

inline std::pair<Vec3, IVec3> wrap_position(Vec3 r, IVec3 image, const SimBox& box) noexcept {
    return box.wrap(r, image);
}

}  // namespace portmd
