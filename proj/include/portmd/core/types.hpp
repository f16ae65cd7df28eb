#pragma once

#include <cstddef>
#include <cstdint>

namespace portmd {

#if defined(PORTMD_SINGLE_PRECISION)
using real = float;
#else
using real = double;
#endif

struct Vec3 {
    real x{};
    real y{};
    real z{};

    constexpr real& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
    constexpr real operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(real s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr bool operator==(Vec3 a, Vec3 b) = default;
};

constexpr real dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

struct IVec3 {
    std::int32_t x{};
    std::int32_t y{};
    std::int32_t z{};

    constexpr std::int32_t& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
    constexpr std::int32_t operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
    friend constexpr bool operator==(IVec3 a, IVec3 b) = default;
};

}  // namespace portmd
