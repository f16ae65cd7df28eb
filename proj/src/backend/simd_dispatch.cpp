#include <string>

#include "portmd/backend/kernels.hpp"
#include "portmd/core/error.hpp"

namespace portmd {

namespace {

constexpr KernelTable scalar_table{SimdLevel::scalar, kernels::all_to_all_scalar, kernels::neighbor_scalar,
                                   kernels::kick_scalar};
#if defined(PORTMD_HAVE_AVX2)
constexpr KernelTable avx2_table{SimdLevel::avx2, kernels::all_to_all_avx2, kernels::neighbor_avx2,
                                 kernels::kick_avx2};
#endif
#if defined(PORTMD_HAVE_AVX512)
constexpr KernelTable avx512_table{SimdLevel::avx512, kernels::all_to_all_avx512, kernels::neighbor_avx512,
                                   kernels::kick_avx512};
#endif

}  // namespace

std::string_view to_string(SimdLevel level) noexcept {
    switch (level) {
    case SimdLevel::automatic: return "auto";
    case SimdLevel::scalar: return "scalar";
    case SimdLevel::avx2: return "avx2";
    case SimdLevel::avx512: return "avx512";
    }
    return "unknown";
}

SimdLevel parse_simd_level(std::string_view text) {
    for (SimdLevel level : {SimdLevel::automatic, SimdLevel::scalar, SimdLevel::avx2, SimdLevel::avx512}) {
        if (text == to_string(level)) {
            return level;
        }
    }
    throw ConfigError("unknown SIMD level '" + std::string(text) + "' (expected auto|scalar|avx2|avx512)");
}

bool simd_supported(SimdLevel level) noexcept {
    switch (level) {
    case SimdLevel::automatic:
    case SimdLevel::scalar: return true;
    case SimdLevel::avx2:
#if defined(PORTMD_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case SimdLevel::avx512:
#if defined(PORTMD_HAVE_AVX512)
        return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

SimdLevel detect_simd() noexcept {
    if (simd_supported(SimdLevel::avx512)) {
        return SimdLevel::avx512;
    }
    if (simd_supported(SimdLevel::avx2)) {
        return SimdLevel::avx2;
    }
    return SimdLevel::scalar;
}

const KernelTable& kernel_table(SimdLevel level) {
    if (level == SimdLevel::automatic) {
        level = detect_simd();
    }
    if (!simd_supported(level)) {
        throw ConfigError("SIMD level '" + std::string(to_string(level)) + "' is not available on this build/CPU");
    }
    switch (level) {
#if defined(PORTMD_HAVE_AVX512)
    case SimdLevel::avx512: return avx512_table;
#endif
#if defined(PORTMD_HAVE_AVX2)
    case SimdLevel::avx2: return avx2_table;
#endif
    default: return scalar_table;
    }
}

}  // namespace portmd
