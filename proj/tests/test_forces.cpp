#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "portmd/core/error.hpp"
#include "portmd/forces/forces.hpp"
#include "portmd/observables/observables.hpp"
#include "portmd/verify/oracles.hpp"

using namespace portmd;
using namespace portmd::testing;

namespace {

ParticleState dimer(double separation) {
    ParticleState s(2);
    s.set_position(0, Vec3{3, 3, 3});
    s.set_position(1, Vec3{3 + separation, 3, 3});
    return s;
}

}  // namespace

TEST(AllToAll, DimerAtMinimumHasZeroForce) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s = dimer(std::pow(2.0, 1.0 / 6.0));
    Backend backend;
    compute_forces_all_to_all(s, LJParams::untruncated(1, 1), box, backend);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_NEAR(s.force(i).x, 0.0, 1e-12);
        EXPECT_EQ(s.force(i).y, 0.0);
        EXPECT_NEAR(s.potential.read(Side::host)[i], -0.5, 1e-15);
    }
}

TEST(AllToAll, EquilateralTriangleIsSymmetric) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s(3);
    const double side = 1.05;
    const Vec3 c{5, 5, 5};
    for (int k = 0; k < 3; ++k) {
        const double a = 2 * M_PI * k / 3;
        const double rad = side / std::sqrt(3.0);
        s.set_position(k, Vec3{c.x + rad * std::cos(a), c.y + rad * std::sin(a), c.z});
    }
    Backend backend;
    compute_forces_all_to_all(s, LJParams::untruncated(1, 1), box, backend);
    Vec3 sum{};
    const double magnitude = std::sqrt(dot(s.force(0), s.force(0)));
    for (int k = 0; k < 3; ++k) {
        const Vec3 f = s.force(k);
        sum = sum + f;
        EXPECT_NEAR(std::sqrt(dot(f, f)), magnitude, 1e-12 * magnitude);
        const Vec3 outward = s.position(k) - c;
        // radial: parallel to the centroid direction
        const double cross_z = f.x * outward.y - f.y * outward.x;
        EXPECT_NEAR(cross_z, 0.0, 1e-12 * magnitude);
    }
    EXPECT_NEAR(std::sqrt(dot(sum, sum)), 0.0, 1e-12 * magnitude);
}

TEST(AllToAll, MatchesDoubleLoopOracleForEightParticles) {
    auto [state, box] = verify::random_configuration(8, 0.1, 77, 0.9);
    Backend backend;
    compute_forces_all_to_all(state, LJParams::untruncated(1, 1), box, backend);
    const auto ref = verify::brute_force_forces(state, box, 1, 1, INFINITY);
    EXPECT_LE(verify::max_relative_force_error(state, ref), 1e-12);
}

TEST(AllToAll, OverlapReportsSmallestPair) {
    ParticleState s(4);
    const SimBox box = SimBox::cubic(10);
    s.set_position(0, Vec3{1, 1, 1});
    s.set_position(1, Vec3{5, 5, 5});
    s.set_position(2, Vec3{1, 1, 1});
    s.set_position(3, Vec3{5, 5, 5});
    Backend backend;
    try {
        compute_forces_all_to_all(s, LJParams::untruncated(1, 1), box, backend);
        FAIL() << "expected SingularPairError";
    } catch (const SingularPairError& e) {
        EXPECT_EQ(e.first, 0u);
        EXPECT_EQ(e.second, 2u);
    }
}

TEST(Truncated, ListedPairBeyondCutoffContributesNothing) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s = dimer(2.7);
    Backend backend;
    NeighborList list = make_list(s, box, backend, 2.5, 0.5);
    ASSERT_EQ(list.counts[0], 1u);
    compute_forces_truncated(s, LJParams::make_shifted(1, 1, 2.5), box, list, backend);
    EXPECT_EQ(s.force(0), (Vec3{0, 0, 0}));
    EXPECT_EQ(s.force(1), (Vec3{0, 0, 0}));
    EXPECT_EQ(s.potential.read(Side::host)[0], 0.0);
}

TEST(Truncated, InsideCutoffEqualsAllToAll) {
    const SimBox box = SimBox::cubic(10);
    ParticleState s = dimer(std::pow(2.0, 1.0 / 6.0));
    Backend backend;
    const LJParams lj = LJParams::make_shifted(1, 1, 2.5);
    compute_forces_all_to_all(s, lj, box, backend);
    const auto f_all = host_copy(s.forces);
    const auto e_all = host_copy(s.potential);
    NeighborList list = make_list(s, box, backend);
    compute_forces_truncated(s, lj, box, list, backend);
    EXPECT_TRUE(bitwise_equal(host_copy(s.forces), f_all));
    EXPECT_TRUE(bitwise_equal(host_copy(s.potential), e_all));
}

TEST(Truncated, MatchesCutoffOracleOnRandomConfiguration) {
    auto [state, box] = verify::random_configuration(500, 0.8, 5);
    Backend backend;
    NeighborList list = make_list(state, box, backend);
    compute_forces_truncated(state, LJParams::make_shifted(1, 1, 2.5), box, list, backend);
    const auto ref = verify::brute_force_forces(state, box, 1, 1, 2.5);
    EXPECT_LE(verify::max_relative_force_error(state, ref), 1e-10);
}

TEST(Truncated, RefusesOverflowedList) {
    auto [state, box] = verify::random_configuration(200, 0.8, 6);
    Backend backend;
    NeighborList list = make_list(state, box, backend, 2.5, 0.5, 4);
    ASSERT_TRUE(list.overflow);
    EXPECT_THROW(compute_forces_truncated(state, LJParams::make_shifted(1, 1, 2.5), box, list, backend),
                 RebuildRequired);
}

TEST(Truncated, FullRangeCutoffEqualsAllToAll) {
    auto [state, box] = verify::random_configuration(150, 0.8, 8);
    const real r_cut = box.smallest_edge() / 2;
    const LJParams lj = LJParams::make_shifted(1, 1, r_cut);
    Backend backend;
    compute_forces_all_to_all(state, lj, box, backend);
    const auto f_all = host_copy(state.forces);
    NeighborList list = make_list(state, box, backend, r_cut, 0.0, 256);
    compute_forces_truncated(state, lj, box, list, backend);
    const auto f_list = host_copy(state.forces);
    for (std::size_t k = 0; k < f_all.size(); ++k) {
        EXPECT_LE(std::fabs(f_all[k] - f_list[k]), 1e-12 * std::max(1.0, std::fabs(f_all[k])));
    }
}

TEST(Forces, NewtonThirdLaw) {
    for (std::uint64_t seed : {1, 2, 3}) {
        auto [state, box] = verify::random_configuration(400, 0.8, seed);
        Backend backend;
        compute_forces_all_to_all(state, LJParams::make_shifted(1, 1, 2.5), box, backend);
        const auto f = host_copy(state.forces);
        const std::size_t n = state.size();
        double max_f = 0;
        long double sx = 0, sy = 0, sz = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += f[i];
            sy += f[n + i];
            sz += f[2 * n + i];
            max_f = std::max(max_f, std::sqrt(f[i] * f[i] + f[n + i] * f[n + i] + f[2 * n + i] * f[2 * n + i]));
        }
        const double total = std::sqrt(static_cast<double>(sx * sx + sy * sy + sz * sz));
        EXPECT_LE(total, n * 1e-11 * max_f);
    }
}

TEST(Forces, TranslationOnDyadicGridIsExact) {
    // positions and shifts on a dyadic grid make every wrapped coordinate exact
    const SimBox box = SimBox::cubic(8);
    std::mt19937_64 rng(4);
    const std::size_t n = 300;
    ParticleState s(n);
    std::vector<Vec3> placed;
    while (placed.size() < n) {
        const Vec3 r{(rng() % (8 << 12)) / 4096.0, (rng() % (8 << 12)) / 4096.0, (rng() % (8 << 12)) / 4096.0};
        bool ok = true;
        for (const Vec3& q : placed) {
            const Vec3 d = box.minimum_image(r - q);
            ok = ok && dot(d, d) > 0.64;
        }
        if (ok) {
            s.set_position(placed.size(), r);
            placed.push_back(r);
        }
    }
    const LJParams lj = LJParams::make_shifted(1, 1, 2.5);
    Backend backend;
    compute_forces_all_to_all(s, lj, box, backend);
    const auto before = host_copy(s.forces);
    const Vec3 shift{3.25, -7.5, 12.0625};
    for (std::size_t i = 0; i < n; ++i) {
        auto [r, img] = box.wrap(placed[i] + shift, IVec3{});
        s.set_position(i, r, img);
    }
    compute_forces_all_to_all(s, lj, box, backend);
    const auto after = host_copy(s.forces);
    for (std::size_t k = 0; k < before.size(); ++k) {
        const double ulp = std::nextafter(std::fabs(before[k]), INFINITY) - std::fabs(before[k]);
        EXPECT_LE(std::fabs(after[k] - before[k]), 4 * ulp);
    }
}

TEST(Forces, TranslationOfGeneralPositionsIsWithinRounding) {
    auto [state, box] = verify::random_configuration(300, 0.8, 12);
    const LJParams lj = LJParams::make_shifted(1, 1, 2.5);
    Backend backend;
    compute_forces_all_to_all(state, lj, box, backend);
    const auto before = host_copy(state.forces);
    double max_f = 0;
    for (double f : before) max_f = std::max(max_f, std::fabs(f));
    const Vec3 shift{0.1234567, -3.3, 17.77};
    for (std::size_t i = 0; i < state.size(); ++i) {
        auto [r, img] = box.wrap(state.position(i) + shift, IVec3{});
        state.set_position(i, r, img);
    }
    compute_forces_all_to_all(state, lj, box, backend);
    const auto after = host_copy(state.forces);
    for (std::size_t k = 0; k < before.size(); ++k) {
        EXPECT_LE(std::fabs(after[k] - before[k]), 1e-11 * max_f);
    }
}

TEST(Forces, BackendsAgreeBitwise) {
    auto [state, box] = verify::random_configuration(777, 0.8, 21);
    const LJParams lj = LJParams::make_shifted(1, 1, 2.5);
    Backend sequential;
    compute_forces_all_to_all(state, lj, box, sequential);
    const auto f_all = host_copy(state.forces);
    const auto e_all = host_copy(state.potential);
    NeighborList list = make_list(state, box, sequential);
    compute_forces_truncated(state, lj, box, list, sequential);
    const auto f_list = host_copy(state.forces);
    const auto e_list = host_copy(state.potential);

    for (const BackendSelector& sel : parallel_selectors()) {
        Backend backend(sel);
        compute_forces_all_to_all(state, lj, box, backend);
        EXPECT_TRUE(bitwise_equal(host_copy(state.forces), f_all)) << to_string(sel.simd) << " " << sel.worker_count;
        EXPECT_TRUE(bitwise_equal(host_copy(state.potential), e_all));
        NeighborList plist = make_list(state, box, backend);
        ASSERT_EQ(plist.indices, list.indices);
        compute_forces_truncated(state, lj, box, plist, backend);
        EXPECT_TRUE(bitwise_equal(host_copy(state.forces), f_list)) << to_string(sel.simd) << " " << sel.worker_count;
        EXPECT_TRUE(bitwise_equal(host_copy(state.potential), e_list));
    }
}

TEST(Forces, FastModeAgreesToRounding) {
    auto [state, box] = verify::random_configuration(500, 0.8, 22);
    const LJParams lj = LJParams::make_shifted(1, 1, 2.5);
    Backend sequential;
    NeighborList list = make_list(state, box, sequential);
    compute_forces_truncated(state, lj, box, list, sequential);
    const auto ref = host_copy(state.forces);
    Backend fast(BackendSelector::parallel(3, false));
    NeighborList flist = make_list(state, box, fast);
    compute_forces_truncated(state, lj, box, flist, fast);
    const auto f = host_copy(state.forces);
    for (std::size_t k = 0; k < f.size(); ++k) {
        EXPECT_NEAR(f[k], ref[k], 1e-10 * std::max(1.0, std::fabs(ref[k])));
    }
}
