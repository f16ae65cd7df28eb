#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "portmd/core/error.hpp"
#include "portmd/forces/forces.hpp"
#include "portmd/observables/observables.hpp"
#include "portmd/verify/oracles.hpp"

using namespace portmd;
using namespace portmd::testing;

TEST(CellGrid, CornerParticlesLandInFirstAndLastCells) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s(2);
    s.set_position(0, Vec3{0.1, 0.1, 0.1});
    s.set_position(1, Vec3{9.9, 9.9, 9.9});
    const CellGrid grid = bin_particles(s, box, 2.5);
    EXPECT_EQ(grid.cells_per_axis, (std::array<std::uint32_t, 3>{4, 4, 4}));
    EXPECT_EQ(grid.cell_of_particle[0], grid.flat_index(0, 0, 0));
    EXPECT_EQ(grid.cell_of_particle[1], grid.flat_index(3, 3, 3));
    EXPECT_FALSE(grid.fallback);
}

TEST(CellGrid, CellEdgeIsNeverBelowListRadius) {
    for (double edge : {7.5, 7.4999999999, 9.0, 12.0000001, 3.0}) {
        const SimBox box = SimBox::cubic(edge);
        ParticleState s(1);
        const CellGrid grid = bin_particles(s, box, 2.5);
        EXPECT_GE(grid.cell_edge.x, 2.5) << edge;
        EXPECT_EQ(grid.cells_per_axis[0], static_cast<std::uint32_t>(std::floor(edge / 2.5)));
    }
}

TEST(CellGrid, OccupancyPartitionsParticles) {
    auto [state, box] = verify::random_configuration(1000, 0.5, 4, 0.0);
    const CellGrid grid = bin_particles(state, box, 2.5);
    const auto counts = grid.occupancy_counts();
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::size_t{0}), 1000u);
    std::vector<int> seen(1000, 0);
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
        for (std::uint32_t i : grid.occupants(c)) {
            ++seen[i];
            EXPECT_EQ(grid.cell_of_particle[i], c);
        }
    }
    for (int k : seen) {
        EXPECT_EQ(k, 1);
    }
}

TEST(CellGrid, ErrorsAndFallback) {
    const SimBox box = SimBox::cubic(6);
    ParticleState s(1);
    EXPECT_THROW(bin_particles(s, box, 0.0), DomainError);
    EXPECT_THROW(bin_particles(s, box, -1.0), DomainError);
    EXPECT_THROW(bin_particles(s, box, 6.5), DomainError);
    EXPECT_TRUE(bin_particles(s, box, 2.5).fallback);
}

TEST(NeighborList, SinglePairInRange) {
    const SimBox box = SimBox::cubic(10);
    for (double factor : {0.9, 1.1}) {
        ParticleState s(2);
        s.set_position(0, Vec3{1, 1, 1});
        s.set_position(1, Vec3{1 + factor * 3.0, 1, 1});
        Backend backend;
        NeighborList list = make_list(s, box, backend, 2.5, 0.5);
        if (factor < 1) {
            ASSERT_EQ(list.counts[0], 1u);
            ASSERT_EQ(list.counts[1], 1u);
            EXPECT_EQ(list.row(0)[0], 1u);
            EXPECT_EQ(list.row(1)[0], 0u);
        } else {
            EXPECT_EQ(list.counts[0], 0u);
            EXPECT_EQ(list.counts[1], 0u);
        }
        EXPECT_EQ(list.rebuild_count, 1u);
    }
}

TEST(NeighborList, PairsAcrossPeriodicBoundary) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s(2);
    s.set_position(0, Vec3{0.2, 5, 5});
    s.set_position(1, Vec3{9.7, 5, 5});
    Backend backend;
    NeighborList list = make_list(s, box, backend);
    EXPECT_EQ(list.counts[0], 1u);
}

TEST(NeighborList, MatchesBruteForceAcrossDensitiesAndBackends) {
    std::vector<BackendSelector> selectors{BackendSelector::sequential(), BackendSelector::parallel(3),
                                           BackendSelector::parallel(2, false)};
    for (unsigned k = 0; k < 12; ++k) {
        const double density = 0.2 + 0.8 * k / 11.0;
        const std::size_t n = 200 + 25 * k;
        auto [state, box] = verify::random_configuration(n, density, 50 + k, 0.7);
        const auto expected = verify::brute_force_pairs(state, box, 3.0);
        for (const auto& sel : selectors) {
            Backend backend(sel);
            NeighborList list = make_list(state, box, backend, 2.5, 0.5, 256);
            ASSERT_FALSE(list.overflow);
            EXPECT_EQ(verify::listed_pairs(list), expected) << "density " << density;
            EXPECT_TRUE(verify::is_symmetric(list));
            if (sel.deterministic) {
                for (std::size_t i = 0; i < n; ++i) {
                    const auto row = list.row(i);
                    EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
                }
            }
        }
    }
}

TEST(NeighborList, OverflowIsFlaggedNotSilent) {
    auto [state, box] = verify::random_configuration(300, 0.9, 3);
    Backend backend;
    NeighborList list = make_list(state, box, backend, 2.5, 0.5, 8);
    EXPECT_TRUE(list.overflow);
    EXPECT_GT(list.max_row_length, 8u);
    for (std::size_t i = 0; i < list.size(); ++i) {
        EXPECT_LE(list.counts[i], 8u);
    }
    EXPECT_THROW(NeighborList(2.5, 0.5, 0), DomainError);
}

TEST(NeedsRebuild, ThresholdIsHalfSkin) {
    Backend backend;
    auto [s, b] = verify::random_configuration(50, 0.05, 9, 1.0);
    NeighborList list = make_list(s, b, backend, 2.5, 0.5);
    EXPECT_FALSE(needs_rebuild(s, b, list, backend));

    const Vec3 r = s.position(7);
    auto [moved, img] = b.wrap(r + Vec3{0.25 + 1e-9, 0, 0}, s.image(7));
    s.set_position(7, moved, img);
    EXPECT_TRUE(needs_rebuild(s, b, list, backend));

    auto [s2, b2] = verify::random_configuration(50, 0.05, 9, 1.0);
    NeighborList list2 = make_list(s2, b2, backend, 2.5, 0.5);
    for (std::size_t i = 0; i < s2.size(); ++i) {
        auto [p, pi] = b2.wrap(s2.position(i) + Vec3{0, 0.49 * 0.5, 0}, s2.image(i));
        s2.set_position(i, p, pi);
    }
    EXPECT_FALSE(needs_rebuild(s2, b2, list2, backend));
}

TEST(NeedsRebuild, WrapEventsDoNotTrigger) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s(1);
    s.set_position(0, Vec3{9.95, 5, 5});
    Backend backend;
    NeighborList list(2.5, 0.5, 8);
    build_neighbor_list(list, s, box, bin_particles(s, box, 3.0), backend);
    auto [p, img] = box.wrap(Vec3{10.05, 5, 5}, s.image(0));
    s.set_position(0, p, img);
    EXPECT_EQ(s.image(0).x, 1);
    EXPECT_FALSE(needs_rebuild(s, box, list, backend));
}

TEST(ReorderByCell, SortedInputGivesIdentity) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s(3);
    s.set_position(0, Vec3{0.5, 0.5, 0.5});
    s.set_position(1, Vec3{0.6, 0.5, 5.5});
    s.set_position(2, Vec3{9.5, 9.5, 9.5});
    const auto order = reorder_by_cell(s, bin_particles(s, box, 2.5));
    EXPECT_EQ(order, (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(ReorderByCell, TwoParticlesSwap) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s(2);
    s.set_position(0, Vec3{0.5, 2.6, 0.5});  // cell (0,1,0) = 4
    s.set_position(1, Vec3{0.5, 0.5, 5.5});  // cell (0,0,2) = 2
    const CellGrid grid = bin_particles(s, box, 2.5);
    ASSERT_GT(grid.cell_of_particle[0], grid.cell_of_particle[1]);
    const auto order = reorder_by_cell(s, grid);
    EXPECT_EQ(order, (std::vector<std::uint32_t>{1, 0}));
    EXPECT_EQ(s.position(0), (Vec3{0.5, 0.5, 5.5}));
}

TEST(ReorderByCell, MatchesReferenceStableSort) {
    auto [state, box] = verify::random_configuration(1000, 0.5, 31, 0.0);
    const CellGrid grid = bin_particles(state, box, 2.5);
    std::vector<std::uint32_t> reference(1000);
    std::iota(reference.begin(), reference.end(), 0u);
    std::stable_sort(reference.begin(), reference.end(), [&](std::uint32_t a, std::uint32_t b) {
        return grid.cell_of_particle[a] < grid.cell_of_particle[b];
    });
    const auto order = reorder_by_cell(state, grid);
    EXPECT_EQ(order, reference);
    const CellGrid after = bin_particles(state, box, 2.5);
    EXPECT_TRUE(std::is_sorted(after.cell_of_particle.begin(), after.cell_of_particle.end()));
}

TEST(ReorderByCell, ForcesAreInvariantAfterRemap) {
    auto [state, box] = verify::random_configuration(600, 0.8, 32);
    const LJParams lj = LJParams::make_shifted(1, 1, 2.5);
    Backend backend;
    NeighborList list = make_list(state, box, backend);
    compute_forces_truncated(state, lj, box, list, backend);
    const auto f_before = host_copy(state.forces);
    const real e_before = potential_energy_total(state, backend);

    const auto order = reorder_by_cell(state, bin_particles(state, box, 3.0));
    list = make_list(state, box, backend);
    compute_forces_truncated(state, lj, box, list, backend);
    const auto f_after = host_copy(state.forces);
    const std::size_t n = state.size();
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < 3; ++c) {
            const double a = f_after[c * n + k];
            const double b = f_before[c * n + order[k]];
            worst = std::max(worst, std::fabs(a - b) / std::max(1.0, std::fabs(b)));
        }
    }
    EXPECT_LE(worst, 1e-12);
    EXPECT_NEAR(potential_energy_total(state, backend), e_before, 1e-12 * std::fabs(e_before));
}

TEST(NeighborList, NoCutoffPairIsMissedBetweenRebuilds) {
    // integrate until just before the rebuild threshold and check coverage each step
    auto [state, box] = verify::random_configuration(300, 0.6, 40);
    Backend backend;
    NeighborList list = make_list(state, box, backend, 2.5, 0.4);
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g(0, 0.01);
    int checked = 0;
    for (int step = 0; step < 200; ++step, ++checked) {
        ParticleState trial(state.size());
        for (std::size_t i = 0; i < state.size(); ++i) {
            auto [p, img] = box.wrap(state.position(i) + Vec3{g(rng), g(rng), g(rng)}, state.image(i));
            trial.set_position(i, p, img);
        }
        if (needs_rebuild(trial, box, list, backend)) {
            break;
        }
        for (std::size_t i = 0; i < state.size(); ++i) {
            state.set_position(i, trial.position(i), trial.image(i));
        }
        const auto listed = verify::listed_pairs(list);
        for (const auto& pair : verify::brute_force_pairs(state, box, 2.5)) {
            ASSERT_TRUE(listed.contains(pair)) << "step " << step;
        }
    }
    EXPECT_GT(checked, 3);
}
