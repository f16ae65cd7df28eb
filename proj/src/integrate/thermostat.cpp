#include <algorithm>
#include <cmath>

#include "portmd/integrate/integrate.hpp"
#include "portmd/integrate/philox.hpp"

namespace portmd {

real collision_probability(const ThermostatParams& params, real dt) noexcept {
    return std::min(params.rate * dt, real(1));
}

void andersen_thermostat(ParticleState& state, const ThermostatParams& params, real dt, std::uint64_t step,
                         Backend& backend) {
    const real p = collision_probability(params, dt);
    if (!(p > 0)) {
        return;
    }
    const real* m = state.masses.read(Side::compute).data();
    const auto v = components(state.velocities.write(Side::compute));
    backend.for_each_chunk(state.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            ParticleStream stream(params.seed, step, static_cast<std::uint32_t>(i));
            if (stream.uniform() < p) {
                const auto z = stream.normal3();
                const real scale = std::sqrt(params.temperature / m[i]);
                v.x[i] = scale * static_cast<real>(z[0]);
                v.y[i] = scale * static_cast<real>(z[1]);
                v.z[i] = scale * static_cast<real>(z[2]);
            }
        }
    });
}

}  // namespace portmd
