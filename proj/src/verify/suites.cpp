#include "portmd/verify/suites.hpp"

#include <cmath>
#include <cstdio>

#include "portmd/forces/forces.hpp"
#include "portmd/integrate/initial_conditions.hpp"
#include "portmd/neighbor/cell_grid.hpp"
#include "portmd/neighbor/neighbor_list.hpp"
#include "portmd/simulation.hpp"
#include "portmd/verify/oracles.hpp"

namespace portmd::verify {

namespace {

std::string format(const char* fmt, double a, double b = 0) {
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, fmt, a, b);
    return buffer;
}

}  // namespace

CheckResult force_oracle_suite(const ForceSuiteOptions& o, const BackendSelector& selector) {
    CheckResult result{"forces", true, {}};
    Backend backend(selector);
    const LJParams params = LJParams::make_shifted(1, 1, static_cast<real>(o.r_cut));
    double worst_list = 0;
    double worst_all = 0;
    for (unsigned k = 0; k < o.configurations; ++k) {
        auto [state, box] = random_configuration(o.n, o.density, o.seed + k);
        const auto reference = brute_force_forces(state, box, 1, 1, o.r_cut);

        NeighborList list(static_cast<real>(o.r_cut), static_cast<real>(o.skin), 128);
        const CellGrid grid = bin_particles(state, box, list.r_list);
        build_neighbor_list(list, state, box, grid, backend);
        compute_forces_truncated(state, params, box, list, backend);
        worst_list = std::max(worst_list, max_relative_force_error(state, reference));

        compute_forces_all_to_all(state, params, box, backend);
        worst_all = std::max(worst_all, max_relative_force_error(state, reference));
    }
    result.passed = worst_list <= o.tolerance && worst_all <= o.tolerance;
    result.detail = std::to_string(o.configurations) + " configurations, max relative error " +
                    format("%.3g (neighbor list), %.3g (all-to-all)", worst_list, worst_all) +
                    format(", tolerance %.0e", o.tolerance);
    return result;
}

CheckResult neighbor_list_suite(const NeighborSuiteOptions& o, const BackendSelector& selector) {
    CheckResult result{"neighbor lists", true, {}};
    Backend backend(selector);
    std::size_t missing = 0;
    std::size_t spurious = 0;
    std::size_t asymmetric = 0;
    std::size_t pairs = 0;
    const double r_list = o.r_cut + o.skin;
    for (unsigned k = 0; k < o.configurations; ++k) {
        const double t = o.configurations > 1 ? static_cast<double>(k) / (o.configurations - 1) : 0.0;
        const double density = o.min_density + t * (o.max_density - o.min_density);
        std::size_t n = 50 + (static_cast<std::size_t>(k) * 97) % (o.max_n - 49);
        // the box must hold at least one list radius
        while (std::cbrt(static_cast<double>(n) / density) < r_list) {
            n *= 2;
        }
        n = std::min(n, o.max_n);
        auto [state, box] = random_configuration(n, density, o.seed + k, 0.7);
        NeighborList list(static_cast<real>(o.r_cut), static_cast<real>(o.skin), 256);
        const CellGrid grid = bin_particles(state, box, list.r_list);
        build_neighbor_list(list, state, box, grid, backend);
        if (list.overflow) {
            result.passed = false;
            result.detail = "list overflowed at stride 256";
            return result;
        }
        const PairSet listed = listed_pairs(list);
        const PairSet expected = brute_force_pairs(state, box, r_list);
        for (const auto& p : expected) {
            missing += listed.contains(p) ? 0 : 1;
        }
        for (const auto& p : listed) {
            spurious += expected.contains(p) ? 0 : 1;
        }
        asymmetric += is_symmetric(list) ? 0 : 1;
        pairs += expected.size();
    }
    result.passed = missing == 0 && spurious == 0 && asymmetric == 0;
    result.detail = std::to_string(o.configurations) + " configurations, " + std::to_string(pairs) + " pairs, " +
                    std::to_string(missing) + " missing, " + std::to_string(spurious) + " spurious, " +
                    std::to_string(asymmetric) + " asymmetric lists";
    return result;
}

CheckResult conservation_suite(const ConservationSuiteOptions& o, const BackendSelector& selector) {
    CheckResult result{"conservation", true, {}};
    InitialSystem system = init_lattice_filled(o.n, static_cast<real>(o.density));
    init_velocities(system.state, static_cast<real>(o.temperature), o.seed);
    SimulationOptions options;
    options.force_mode = ForceMode::truncated;
    options.potential = LJParams::make_shifted(1, 1, 2.5);
    options.integrator.dt = static_cast<real>(o.dt);
    options.sample_interval = std::max<std::uint64_t>(1, o.steps / 100);
    Simulation sim(std::move(system.state), system.box, options, selector);
    const double e0 = sim.measure().total_energy;
    sim.run(o.steps);
    const Sample last = sim.measure();
    double worst_momentum = 0;
    for (const Sample& s : sim.samples()) {
        worst_momentum = std::max(worst_momentum, static_cast<double>(std::sqrt(dot(s.total_momentum, s.total_momentum))));
    }
    const double drift = std::fabs(last.total_energy - e0) / std::fabs(e0);
    result.passed = drift <= o.drift_tolerance && worst_momentum <= o.momentum_tolerance;
    result.detail = std::to_string(o.steps) + " steps, n=" + std::to_string(o.n) +
                    format(", relative energy drift %.3g, max |P| %.3g", drift, worst_momentum);
    return result;
}

std::vector<CheckResult> quick_suites() {
    std::vector<CheckResult> results;
    auto add = [&results](CheckResult r, const BackendSelector& selector) {
        r.name += std::string(" (") + std::string(to_string(selector.kind)) + ")";
        results.push_back(std::move(r));
    };
    const BackendSelector sequential = BackendSelector::sequential();
    const BackendSelector parallel = BackendSelector::parallel(2);
    ForceSuiteOptions forces;
    forces.configurations = 4;
    forces.n = 300;
    NeighborSuiteOptions lists;
    lists.configurations = 10;
    lists.max_n = 300;
    for (const auto& selector : {sequential, parallel}) {
        add(force_oracle_suite(forces, selector), selector);
        add(neighbor_list_suite(lists, selector), selector);
    }
    add(conservation_suite(ConservationSuiteOptions{}, parallel), parallel);
    return results;
}

}  // namespace portmd::verify
