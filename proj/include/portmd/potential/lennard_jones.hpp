#pragma once

#include <limits>

#include "portmd/core/types.hpp"

namespace portmd {

/// Precomputed constants in the form the force kernels consume.
struct LJCoefficients {
    real sigma2;
    real eps4;   ///< 4 epsilon
    real eps48;  ///< 48 epsilon
    real shift;
    real rc2;    ///< squared cutoff, +inf when untruncated
};

struct PairTerms {
    real energy;
    real force_over_r;  ///< |F|/r, positive when repulsive
};

/// Pair energy and force for r^2 > 0. Returns (0, 0) at and beyond the cutoff.
///
/// The SIMD kernels replicate this exact operation sequence; any change here
/// has to be mirrored there or the backends stop agreeing bitwise.
inline PairTerms lj_pair(real r2, const LJCoefficients& c) noexcept {
    if (!(r2 < c.rc2)) {
        return {0, 0};
    }
    const real inv_r2 = real(1) / r2;
    const real sr2 = c.sigma2 * inv_r2;
    const real sr6 = sr2 * sr2 * sr2;
    const real force_over_r = c.eps48 * sr6 * (sr6 - real(0.5)) * inv_r2;
    const real energy = c.eps4 * sr6 * (sr6 - real(1)) + c.shift;
    return {energy, force_over_r};
}

/// Lennard-Jones parameters, optionally truncated and energy-shifted so that
/// U(r_cut) = 0.
class LJParams {
public:
    static constexpr real infinite_cutoff = std::numeric_limits<real>::infinity();

    /// Untruncated 4 eps [(sigma/r)^12 - (sigma/r)^6]. Throws DomainError on
    /// non-positive inputs.
    static LJParams untruncated(real epsilon, real sigma);

    /// Truncated at r_cut and shifted so the energy vanishes there. An infinite
    /// r_cut gives the untruncated form with zero shift. Throws DomainError on
    /// non-positive inputs or r_cut <= sigma.
    static LJParams make_shifted(real epsilon, real sigma, real r_cut);

    real epsilon() const noexcept { return epsilon_; }
    real sigma() const noexcept { return sigma_; }
    real r_cut() const noexcept { return r_cut_; }
    real energy_shift() const noexcept { return energy_shift_; }
    bool truncated() const noexcept { return r_cut_ < infinite_cutoff; }

    LJCoefficients coefficients() const noexcept;

private:
    LJParams(real epsilon, real sigma, real r_cut);

    real epsilon_;
    real sigma_;
    real r_cut_;
    real energy_shift_ = 0;
};

/// Checked evaluation. Throws DomainError for r_squared <= 0.
PairTerms lj_eval(real r_squared, const LJParams& params);

}  // namespace portmd
