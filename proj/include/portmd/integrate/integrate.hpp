#pragma once

#include <cstdint>

#include "portmd/backend/backend.hpp"
#include "portmd/core/box.hpp"
#include "portmd/core/particle_state.hpp"

namespace portmd {

struct IntegratorParams {
    real dt = real(0.002);
};

/// Andersen-style coupling: each step every particle independently gets a
/// fresh Maxwell-Boltzmann velocity with probability min(rate * dt, 1).
struct ThermostatParams {
    real temperature = real(1.5);
    real rate = real(5);  ///< collisions per unit time; 5 gives p = 0.01 at dt = 0.002
    std::uint64_t seed = 1;
};

/// First velocity-Verlet half step: v += F/m dt/2, then r += v dt with
/// periodic wrapping. Throws DomainError for dt <= 0.
void vv_integrate(ParticleState& state, const IntegratorParams& params, const SimBox& box, Backend& backend);

/// Second half step: v += F/m dt/2 using forces at the new positions.
void vv_finalize(ParticleState& state, const IntegratorParams& params, Backend& backend);

/// Collision probability per particle and step.
real collision_probability(const ThermostatParams& params, real dt) noexcept;

/// Stochastic velocity redraw. Random numbers are keyed on (seed, step,
/// particle index), so results do not depend on the worker count.
void andersen_thermostat(ParticleState& state, const ThermostatParams& params, real dt, std::uint64_t step,
                         Backend& backend);

}  // namespace portmd
