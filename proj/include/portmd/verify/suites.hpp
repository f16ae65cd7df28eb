#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "portmd/backend/backend.hpp"
#include "portmd/core/types.hpp"

namespace portmd::verify {

/// Default tolerances assume double precision; single-precision builds get looser ones.
inline constexpr bool double_precision = sizeof(real) == sizeof(double);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ForceSuiteOptions {
    unsigned configurations = 20;
    std::size_t n = 500;
    double density = 0.8;
    double r_cut = 2.5;
    double skin = 0.5;
    double tolerance = double_precision ? 1e-10 : 1e-4;
    std::uint64_t seed = 1000;
};

/// Neighbor-list forces (and all-to-all forces with the same cutoff) against
/// the brute-force oracle on random configurations.
CheckResult force_oracle_suite(const ForceSuiteOptions& options, const BackendSelector& backend);

struct NeighborSuiteOptions {
    unsigned configurations = 50;
    std::size_t max_n = 500;
    double min_density = 0.2;
    double max_density = 1.0;
    double r_cut = 2.5;
    double skin = 0.3;
    std::uint64_t seed = 2000;
};

/// Listed pair sets against the brute-force pair set; every list must also be symmetric.
CheckResult neighbor_list_suite(const NeighborSuiteOptions& options, const BackendSelector& backend);

struct ConservationSuiteOptions {
    std::size_t n = 500;
    double density = 0.8;
    double temperature = 1.0;
    double dt = 0.002;
    std::uint64_t steps = 1000;
    double drift_tolerance = 1e-4;
    double momentum_tolerance = double_precision ? 1e-9 : 1e-3;
    std::uint64_t seed = 3;
};

/// NVE run with neighbor-list forces: relative energy drift and total momentum.
CheckResult conservation_suite(const ConservationSuiteOptions& options, const BackendSelector& backend);

/// Small versions of all suites, used by the `verify` command.
std::vector<CheckResult> quick_suites();

}  // namespace portmd::verify
