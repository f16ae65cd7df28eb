#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "portmd/bench/config.hpp"

namespace portmd::bench {

struct Preset {
    std::string name;
    std::string summary;
    /// Which values follow the reference benchmarks and which were chosen here.
    std::string notes;
    BenchConfig config;
};

const std::vector<Preset>& presets();
/// Throws ConfigError listing the known names if `name` is not a preset.
const Preset& find_preset(std::string_view name);

}  // namespace portmd::bench
