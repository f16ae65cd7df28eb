#include "portmd/potential/lennard_jones.hpp"

#include <cmath>
#include <string>

#include "portmd/core/error.hpp"

namespace portmd {

LJParams::LJParams(real epsilon, real sigma, real r_cut) : epsilon_(epsilon), sigma_(sigma), r_cut_(r_cut) {
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
        throw DomainError("epsilon must be positive, got " + std::to_string(epsilon));
    }
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw DomainError("sigma must be positive, got " + std::to_string(sigma));
    }
    if (!(r_cut > 0)) {
        throw DomainError("r_cut must be positive, got " + std::to_string(r_cut));
    }
    if (std::isfinite(r_cut) && !(r_cut > sigma)) {
        throw DomainError("r_cut must exceed sigma, got r_cut=" + std::to_string(r_cut));
    }
    if (truncated()) {
        LJCoefficients raw = coefficients();
        raw.shift = 0;
        raw.rc2 = infinite_cutoff;
        energy_shift_ = -lj_pair(r_cut * r_cut, raw).energy;
    }
}

LJParams LJParams::untruncated(real epsilon, real sigma) { return LJParams(epsilon, sigma, infinite_cutoff); }

LJParams LJParams::make_shifted(real epsilon, real sigma, real r_cut) { return LJParams(epsilon, sigma, r_cut); }

LJCoefficients LJParams::coefficients() const noexcept {
    return {sigma_ * sigma_, real(4) * epsilon_, real(48) * epsilon_, energy_shift_,
            truncated() ? r_cut_ * r_cut_ : infinite_cutoff};
}

PairTerms lj_eval(real r_squared, const LJParams& params) {
    if (!(r_squared > 0)) {
        throw DomainError("lj_eval requires r^2 > 0, got " + std::to_string(r_squared));
    }
    return lj_pair(r_squared, params.coefficients());
}

}  // namespace portmd
