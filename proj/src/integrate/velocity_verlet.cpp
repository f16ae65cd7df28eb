#include <string>

#include "portmd/core/error.hpp"
#include "portmd/integrate/integrate.hpp"

namespace portmd {

namespace {

void check_dt(const IntegratorParams& params) {
    if (!(params.dt > 0)) {
        throw DomainError("time step must be positive, got " + std::to_string(params.dt));
    }
}

void kick(ParticleState& state, real half_dt, Backend& backend) {
    const auto f = components(state.forces.read(Side::compute));
    const real* m = state.masses.read(Side::compute).data();
    const auto v = components(state.velocities.write(Side::compute));
    const KickArgs args{v.x, v.y, v.z, f.x, f.y, f.z, m, half_dt};
    const KickKernel kernel = backend.kernels().kick;
    backend.for_each_chunk(state.size(),
                           [&](std::size_t, std::size_t begin, std::size_t end) { kernel(args, begin, end); });
}

}  // namespace

void vv_integrate(ParticleState& state, const IntegratorParams& params, const SimBox& box, Backend& backend) {
    check_dt(params);
    kick(state, real(0.5) * params.dt, backend);

    const real dt = params.dt;
    const auto v = components(state.velocities.read(Side::compute));
    const auto r = components(state.positions.write(Side::compute));
    const auto img = components(state.images.write(Side::compute));
    backend.for_each_chunk(state.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vec3 moved{r.x[i] + v.x[i] * dt, r.y[i] + v.y[i] * dt, r.z[i] + v.z[i] * dt};
            const auto [wrapped, image] = box.wrap(moved, IVec3{img.x[i], img.y[i], img.z[i]});
            r.x[i] = wrapped.x;
            r.y[i] = wrapped.y;
            r.z[i] = wrapped.z;
            img.x[i] = image.x;
            img.y[i] = image.y;
            img.z[i] = image.z;
        }
    });
}

void vv_finalize(ParticleState& state, const IntegratorParams& params, Backend& backend) {
    check_dt(params);
    kick(state, real(0.5) * params.dt, backend);
}

}  // namespace portmd
