#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "portmd/core/box.hpp"
#include "portmd/core/tracked_buffer.hpp"
#include "portmd/core/types.hpp"

namespace portmd {

/// Three component arrays of one vector-valued particle property.
template <class T>
struct ComponentView {
    T* x;
    T* y;
    T* z;
};

/// Splits a component-major array of length 3n into its x, y and z blocks.
template <class T>
ComponentView<T> components(std::span<T> flat) noexcept {
    const std::size_t n = flat.size() / 3;
    return {flat.data(), flat.data() + n, flat.data() + 2 * n};
}

/// Structure-of-arrays particle data.
///
/// Vector-valued properties are stored component-major (all x, then all y,
/// then all z) so kernels read contiguous lanes. Positions are kept wrapped
/// into the box; `images` counts the periodic wraps per axis.
class ParticleState {
public:
    ParticleState() = default;
    /// Zero positions/velocities, unit masses, species 0.
    explicit ParticleState(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    TrackedBuffer<real> positions;
    TrackedBuffer<std::int32_t> images;
    TrackedBuffer<real> velocities;
    TrackedBuffer<real> forces;
    TrackedBuffer<real> masses;
    TrackedBuffer<std::uint32_t> species;
    TrackedBuffer<real> potential;  ///< per-particle half-share of the pair energy

    // Host-side element access, mostly for setup and tests.
    Vec3 position(std::size_t i);
    IVec3 image(std::size_t i);
    Vec3 velocity(std::size_t i);
    Vec3 force(std::size_t i);
    Vec3 unwrapped_position(std::size_t i, const SimBox& box);

    void set_position(std::size_t i, Vec3 r, IVec3 image = {});
    void set_velocity(std::size_t i, Vec3 v);
    void set_mass(std::size_t i, real m);

    /// Positions plus image offsets, component-major, length 3n.
    std::vector<real> unwrapped_positions(const SimBox& box);

    /// Applies `order` (new slot k holds old particle order[k]) to every array.
    void permute(std::span<const std::uint32_t> order);

private:
    std::size_t n_ = 0;
};

}  // namespace portmd
