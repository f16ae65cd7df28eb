#include "portmd/bench/presets.hpp"

#include "portmd/core/error.hpp"

namespace portmd::bench {

namespace {

BenchConfig standard_state() {
    BenchConfig c;
    c.n_particles = 2000;
    c.density = 0.8;
    c.temperature = 1.5;
    c.dt = 0.002;
    c.steps = 5000;
    c.r_cut = 2.5;
    c.skin = 0.5;
    c.thermostat_rate = 0;
    c.seed = 1;
    c.force_mode = ForceMode::all_to_all;
    c.backend = BackendKind::sequential;
    c.worker_count = 1;
    c.deterministic = true;
    c.sample_interval = 100;
    c.equilibration_steps = 0;
    return c;
}

constexpr const char* chosen_state =
    "density 0.8, T 1.5, dt 0.002, r_cut 2.5 sigma with energy shift, skin 0.5 are chosen values";

std::vector<Preset> make_presets() {
    std::vector<Preset> out;

    BenchConfig cpu = standard_state();
    out.push_back({"cpu_all_to_all", "all-to-all forces, 2000 particles, 5000 steps",
                   std::string("particle and step counts of the reference CPU benchmark; ") + chosen_state, cpu});

    BenchConfig gpu = standard_state();
    gpu.steps = 20000;
    out.push_back({"gpu_all_to_all", "all-to-all forces, 2000 particles, 20000 steps",
                   std::string("step count of the reference all-to-all accelerator benchmark; ") + chosen_state,
                   gpu});

    BenchConfig desk = standard_state();
    desk.n_particles = 10000;
    desk.steps = 5000;
    desk.force_mode = ForceMode::truncated;
    out.push_back({"truncated_desk", "neighbor-list forces, 10000 particles, 5000 steps",
                   std::string("desk-scaled from a 100000-particle, 50000-step reference run; ") + chosen_state,
                   desk});

    BenchConfig nve = standard_state();
    nve.temperature = 1.0;
    nve.force_mode = ForceMode::truncated;
    nve.equilibration_steps = 500;
    out.push_back({"nve", "energy conservation run, 2000 particles, 5000 steps, no thermostat",
                   "step and particle counts of the reference CPU benchmark; T 1.0 and neighbor-list forces are "
                   "chosen so the run takes seconds",
                   nve});

    BenchConfig thermo = standard_state();
    thermo.steps = 50000;
    thermo.thermostat_rate = 5;
    thermo.force_mode = ForceMode::truncated;
    thermo.equilibration_steps = 5000;
    out.push_back({"thermostat", "Andersen thermostat at T 1.5, collision probability 0.01 per step",
                   "all values chosen; rate 5 with dt 0.002 gives rate*dt = 0.01", thermo});
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = make_presets();
    return all;
}

const Preset& find_preset(std::string_view name) {
    std::string known;
    for (const auto& p : presets()) {
        if (p.name == name) {
            return p;
        }
        known += (known.empty() ? "" : ", ") + p.name;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace portmd::bench
