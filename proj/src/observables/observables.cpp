#include <vector>

#include "portmd/observables/observables.hpp"

namespace portmd {

namespace {

// Per-particle terms are formed on the host copy and then reduced.
real sum_terms(std::vector<real>& terms, Backend& backend) {
    return reduce_sum(std::span<const real>(terms), reduce_mode_for(backend), &backend);
}

}  // namespace

KineticSummary kinetic_energy_and_temperature(ParticleState& state, Backend& backend) {
    const std::size_t n = state.size();
    if (n == 0) {
        return {0, 0};
    }
    const auto v = components(state.velocities.read(Side::host));
    const auto m = state.masses.read(Side::host);
    std::vector<real> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        terms[i] = m[i] * (v.x[i] * v.x[i] + v.y[i] * v.y[i] + v.z[i] * v.z[i]);
    }
    const real kinetic = real(0.5) * sum_terms(terms, backend);
    return {kinetic, real(2) * kinetic / (real(3) * static_cast<real>(n))};
}

real potential_energy_total(ParticleState& state, Backend& backend) {
    const auto u = state.potential.read(Side::host);
    return reduce_sum(u, reduce_mode_for(backend), &backend);
}

Vec3 total_momentum(ParticleState& state, Backend& backend) {
    const std::size_t n = state.size();
    const auto v = components(state.velocities.read(Side::host));
    const auto m = state.masses.read(Side::host);
    std::vector<real> terms(n);
    Vec3 p;
    const real* axes[3] = {v.x, v.y, v.z};
    for (int a = 0; a < 3; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            terms[i] = m[i] * axes[a][i];
        }
        p[a] = sum_terms(terms, backend);
    }
    return p;
}

Sample take_sample(ParticleState& state, Backend& backend, std::uint64_t step, real dt, std::uint64_t rebuild_count) {
    Sample s;
    s.step = step;
    s.time = static_cast<real>(step) * dt;
    s.potential_energy = potential_energy_total(state, backend);
    const KineticSummary k = kinetic_energy_and_temperature(state, backend);
    s.kinetic_energy = k.kinetic_energy;
    s.temperature = k.temperature;
    s.total_energy = s.potential_energy + s.kinetic_energy;
    s.total_momentum = total_momentum(state, backend);
    s.rebuild_count = rebuild_count;
    return s;
}

}  // namespace portmd
