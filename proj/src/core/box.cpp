#include "portmd/core/box.hpp"

#include <algorithm>
#include <string>

#include "portmd/core/error.hpp"

namespace portmd {

SimBox::SimBox(Vec3 edges) : edges_(edges) {
    for (int a = 0; a < 3; ++a) {
        if (!(edges[a] > 0) || !std::isfinite(edges[a])) {
            throw DomainError("box edge " + std::to_string(a) + " must be positive and finite, got " +
                              std::to_string(edges[a]));
        }
        inverse_edges_[a] = real(1) / edges[a];
    }
}

real SimBox::smallest_edge() const noexcept { return std::min({edges_.x, edges_.y, edges_.z}); }

std::pair<Vec3, IVec3> SimBox::wrap(Vec3 r, IVec3 image) const noexcept {
    for (int a = 0; a < 3; ++a) {
        const real edge = edges_[a];
        const real shift = std::floor(r[a] * inverse_edges_[a]);
        if (shift != 0) {
            r[a] -= shift * edge;
            image[a] += static_cast<std::int32_t>(shift);
        }
        // floor of the scaled coordinate can be off by one near the boundaries
        if (r[a] >= edge) {
            r[a] -= edge;
            image[a] += 1;
        } else if (r[a] < 0) {
            r[a] += edge;
            image[a] -= 1;
            // -tiny + L rounds to L itself
            if (r[a] >= edge) {
                r[a] = 0;
                image[a] += 1;
            }
        }
    }
    return {r, image};
}

}  // namespace portmd
