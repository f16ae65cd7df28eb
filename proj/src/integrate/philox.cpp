#include "portmd/integrate/philox.hpp"

#include <cmath>
#include <numbers>

namespace portmd {

namespace {

constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += philox_w0;
            key[1] += philox_w1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(philox_m0, ctr[0], hi0, lo0);
        mulhilo(philox_m1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

void ParticleStream::refill() noexcept {
    block_ = philox4x32(counter_, key_);
    ++counter_[3];
    used_ = 0;
}

double ParticleStream::uniform() noexcept {
    if (used_ + 2 > 4) {
        refill();
    }
    const double u = uniform_from_words(block_[used_], block_[used_ + 1]);
    used_ += 2;
    return u;
}

std::array<double, 3> ParticleStream::normal3() noexcept {
    // 1 - u lies in (0, 1], keeping the logarithm finite
    const double r0 = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double t0 = 2.0 * std::numbers::pi * uniform();
    const double r1 = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double t1 = 2.0 * std::numbers::pi * uniform();
    return {r0 * std::cos(t0), r0 * std::sin(t0), r1 * std::cos(t1)};
}

}  // namespace portmd
