#pragma once

#include <array>
#include <cstdint>

#include "portmd/core/types.hpp"

namespace portmd {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Output is a pure function of (counter, key).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key) noexcept;

inline PhiloxKey philox_key(std::uint64_t seed) noexcept {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// Uniform in [0, 1) with 53 random bits taken from two words.
inline double uniform_from_words(std::uint32_t hi, std::uint32_t lo) noexcept {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32 | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

/// Random stream for one (particle, step) pair. Each draw consumes one
/// Philox block; normals come from Box-Muller on consecutive uniforms.
class ParticleStream {
public:
    ParticleStream(std::uint64_t seed, std::uint64_t step, std::uint32_t particle) noexcept
        : key_(philox_key(seed)),
          counter_{particle, static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32), 0} {}

    double uniform() noexcept;
    /// Three independent standard normal variates.
    std::array<double, 3> normal3() noexcept;

private:
    void refill() noexcept;

    PhiloxKey key_;
    PhiloxCounter counter_;
    PhiloxCounter block_{};
    unsigned used_ = 4;
};

}  // namespace portmd
