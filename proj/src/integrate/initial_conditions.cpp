#include "portmd/integrate/initial_conditions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "portmd/core/error.hpp"
#include "portmd/integrate/philox.hpp"

namespace portmd {

namespace {

// Steps are counted from 1, so this step index never collides with a
// thermostat draw.
constexpr std::uint64_t init_velocity_step = std::numeric_limits<std::uint64_t>::max();

constexpr real fcc_basis[4][3] = {{0, 0, 0}, {0, real(0.5), real(0.5)}, {real(0.5), 0, real(0.5)},
                                  {real(0.5), real(0.5), 0}};

std::size_t cells_for(std::size_t n) {
    std::size_t k = 1;
    while (4 * k * k * k < n) {
        ++k;
    }
    return k;
}

InitialSystem place(std::size_t n, std::size_t k, real density) {
    if (!(density > 0) || !std::isfinite(density)) {
        throw DomainError("density must be positive, got " + std::to_string(density));
    }
    const real edge = std::cbrt(static_cast<real>(n) / density);
    const real a = edge / static_cast<real>(k);
    InitialSystem system{ParticleState(n), SimBox::cubic(edge)};
    auto pos = components(system.state.positions.write(Side::host));
    std::size_t i = 0;
    for (std::size_t ix = 0; ix < k && i < n; ++ix) {
        for (std::size_t iy = 0; iy < k && i < n; ++iy) {
            for (std::size_t iz = 0; iz < k && i < n; ++iz) {
                for (const auto& b : fcc_basis) {
                    if (i == n) {
                        break;
                    }
                    pos.x[i] = a * (static_cast<real>(ix) + b[0]);
                    pos.y[i] = a * (static_cast<real>(iy) + b[1]);
                    pos.z[i] = a * (static_cast<real>(iz) + b[2]);
                    ++i;
                }
            }
        }
    }
    return system;
}

}  // namespace

std::size_t nearest_fcc_count(std::size_t n) {
    const std::size_t k = cells_for(n);
    const std::size_t above = 4 * k * k * k;
    if (k == 1) {
        return above;
    }
    const std::size_t below = 4 * (k - 1) * (k - 1) * (k - 1);
    return (n - below < above - n) ? below : above;
}

InitialSystem init_lattice(std::size_t n, real density) {
    const std::size_t k = cells_for(n);
    if (n == 0 || 4 * k * k * k != n) {
        throw DomainError("fcc lattice needs n = 4 k^3 particles; " + std::to_string(n) +
                          " is not valid, nearest valid count is " + std::to_string(nearest_fcc_count(n)));
    }
    return place(n, k, density);
}

InitialSystem init_lattice_filled(std::size_t n, real density) {
    if (n == 0) {
        throw DomainError("particle count must be positive");
    }
    return place(n, cells_for(n), density);
}

void init_velocities(ParticleState& state, real temperature, std::uint64_t seed) {
    if (!(temperature >= 0)) {
        throw DomainError("temperature must be non-negative, got " + std::to_string(temperature));
    }
    const std::size_t n = state.size();
    const auto m = state.masses.read(Side::host);
    auto v = components(state.velocities.write_discard(Side::host));
    if (temperature == 0 || n == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            v.x[i] = v.y[i] = v.z[i] = 0;
        }
        return;
    }

    Vec3 momentum;
    real total_mass = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ParticleStream stream(seed, init_velocity_step, static_cast<std::uint32_t>(i));
        const auto z = stream.normal3();
        const real scale = std::sqrt(temperature / m[i]);
        v.x[i] = scale * static_cast<real>(z[0]);
        v.y[i] = scale * static_cast<real>(z[1]);
        v.z[i] = scale * static_cast<real>(z[2]);
        momentum = momentum + m[i] * Vec3{v.x[i], v.y[i], v.z[i]};
        total_mass += m[i];
    }
    const Vec3 drift = (real(1) / total_mass) * momentum;
    real twice_kinetic = 0;
    for (std::size_t i = 0; i < n; ++i) {
        v.x[i] -= drift.x;
        v.y[i] -= drift.y;
        v.z[i] -= drift.z;
        twice_kinetic += m[i] * (v.x[i] * v.x[i] + v.y[i] * v.y[i] + v.z[i] * v.z[i]);
    }
    const real current = twice_kinetic / (real(3) * static_cast<real>(n));
    if (current > 0) {
        const real factor = std::sqrt(temperature / current);
        for (std::size_t i = 0; i < n; ++i) {
            v.x[i] *= factor;
            v.y[i] *= factor;
            v.z[i] *= factor;
        }
    }
}

}  // namespace portmd
