#include "portmd/core/particle_state.hpp"

#include <cassert>

namespace portmd {

namespace {

template <class T>
Vec3 load3(std::span<const T> flat, std::size_t i, std::size_t n) {
    return {static_cast<real>(flat[i]), static_cast<real>(flat[n + i]), static_cast<real>(flat[2 * n + i])};
}

template <class T>
void permute_components(TrackedBuffer<T>& buffer, std::span<const std::uint32_t> order, std::size_t width) {
    const auto source = buffer.read(Side::compute);
    std::vector<T> permuted(source.size());
    const std::size_t n = order.size();
    for (std::size_t c = 0; c < width; ++c) {
        for (std::size_t k = 0; k < n; ++k) {
            permuted[c * n + k] = source[c * n + order[k]];
        }
    }
    auto target = buffer.write_discard(Side::compute);
    std::copy(permuted.begin(), permuted.end(), target.begin());
}

}  // namespace

ParticleState::ParticleState(std::size_t n)
    : positions(3 * n),
      images(3 * n),
      velocities(3 * n),
      forces(3 * n),
      masses(n, real(1)),
      species(n),
      potential(n),
      n_(n) {}

Vec3 ParticleState::position(std::size_t i) { return load3(positions.read(Side::host), i, n_); }

IVec3 ParticleState::image(std::size_t i) {
    const auto flat = images.read(Side::host);
    return {flat[i], flat[n_ + i], flat[2 * n_ + i]};
}

Vec3 ParticleState::velocity(std::size_t i) { return load3(velocities.read(Side::host), i, n_); }

Vec3 ParticleState::force(std::size_t i) { return load3(forces.read(Side::host), i, n_); }

Vec3 ParticleState::unwrapped_position(std::size_t i, const SimBox& box) {
    return box.unwrap(position(i), image(i));
}

void ParticleState::set_position(std::size_t i, Vec3 r, IVec3 image) {
    assert(i < n_);
    auto pos = positions.write(Side::host);
    auto img = images.write(Side::host);
    for (int a = 0; a < 3; ++a) {
        pos[a * n_ + i] = r[a];
        img[a * n_ + i] = image[a];
    }
}

void ParticleState::set_velocity(std::size_t i, Vec3 v) {
    assert(i < n_);
    auto vel = velocities.write(Side::host);
    for (int a = 0; a < 3; ++a) {
        vel[a * n_ + i] = v[a];
    }
}

void ParticleState::set_mass(std::size_t i, real m) { masses.write(Side::host)[i] = m; }

std::vector<real> ParticleState::unwrapped_positions(const SimBox& box) {
    const auto pos = positions.read(Side::host);
    const auto img = images.read(Side::host);
    std::vector<real> out(3 * n_);
    for (std::size_t a = 0; a < 3; ++a) {
        const real edge = box.edges()[static_cast<int>(a)];
        for (std::size_t i = 0; i < n_; ++i) {
            out[a * n_ + i] = pos[a * n_ + i] + static_cast<real>(img[a * n_ + i]) * edge;
        }
    }
    return out;
}

void ParticleState::permute(std::span<const std::uint32_t> order) {
    assert(order.size() == n_);
    permute_components(positions, order, 3);
    permute_components(images, order, 3);
    permute_components(velocities, order, 3);
    permute_components(forces, order, 3);
    permute_components(masses, order, 1);
    permute_components(species, order, 1);
    permute_components(potential, order, 1);
}

}  // namespace portmd
