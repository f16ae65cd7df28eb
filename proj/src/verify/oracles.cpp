#include "portmd/verify/oracles.hpp"

#include <cmath>
#include <random>

#include "portmd/core/error.hpp"

namespace portmd::verify {

namespace {

struct HostPositions {
    std::vector<long double> x, y, z;
};

HostPositions host_positions(ParticleState& state) {
    const auto flat = state.positions.read(Side::host);
    const std::size_t n = state.size();
    HostPositions p;
    p.x.assign(flat.begin(), flat.begin() + n);
    p.y.assign(flat.begin() + n, flat.begin() + 2 * n);
    p.z.assign(flat.begin() + 2 * n, flat.end());
    return p;
}

long double image_delta(long double d, long double edge) { return d - edge * std::round(d / edge); }

}  // namespace

std::pair<ParticleState, SimBox> random_configuration(std::size_t n, double density, std::uint64_t seed,
                                                      double min_separation) {
    if (n == 0 || !(density > 0)) {
        throw DomainError("random_configuration needs n > 0 and a positive density");
    }
    const double edge = std::cbrt(static_cast<double>(n) / density);
    SimBox box = SimBox::cubic(static_cast<real>(edge));
    ParticleState state(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, edge);
    std::vector<Vec3> placed;
    placed.reserve(n);
    const double min2 = min_separation * min_separation;
    std::size_t attempts = 0;
    while (placed.size() < n) {
        if (++attempts > 1000 * n) {
            throw DomainError("random_configuration: cannot place particles at this density and separation");
        }
        const Vec3 r{static_cast<real>(coord(rng)), static_cast<real>(coord(rng)), static_cast<real>(coord(rng))};
        bool clear = true;
        for (const Vec3& q : placed) {
            const long double dx = image_delta(r.x - q.x, edge);
            const long double dy = image_delta(r.y - q.y, edge);
            const long double dz = image_delta(r.z - q.z, edge);
            if (dx * dx + dy * dy + dz * dz < min2) {
                clear = false;
                break;
            }
        }
        if (clear) {
            state.set_position(placed.size(), r);
            placed.push_back(r);
        }
    }
    return {std::move(state), box};
}

std::vector<long double> brute_force_forces(ParticleState& state, const SimBox& box, double epsilon, double sigma,
                                            double r_cut) {
    const std::size_t n = state.size();
    const HostPositions p = host_positions(state);
    const Vec3 edges = box.edges();
    std::vector<long double> f(3 * n, 0.0L);
    const long double eps = epsilon;
    const long double sig = sigma;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const long double dx = image_delta(p.x[i] - p.x[j], edges.x);
            const long double dy = image_delta(p.y[i] - p.y[j], edges.y);
            const long double dz = image_delta(p.z[i] - p.z[j], edges.z);
            const long double r = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (!(r < r_cut)) {
                continue;
            }
            // F(r) = 24 eps / r * (2 (sigma/r)^12 - (sigma/r)^6), directed along r_ij
            const long double magnitude =
                24.0L * eps / r * (2.0L * std::pow(sig / r, 12.0L) - std::pow(sig / r, 6.0L));
            f[i] += magnitude * dx / r;
            f[n + i] += magnitude * dy / r;
            f[2 * n + i] += magnitude * dz / r;
        }
    }
    return f;
}

PairSet brute_force_pairs(ParticleState& state, const SimBox& box, double r_list) {
    const std::size_t n = state.size();
    const HostPositions p = host_positions(state);
    const Vec3 edges = box.edges();
    PairSet pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const long double dx = image_delta(p.x[i] - p.x[j], edges.x);
            const long double dy = image_delta(p.y[i] - p.y[j], edges.y);
            const long double dz = image_delta(p.z[i] - p.z[j], edges.z);
            if (std::sqrt(dx * dx + dy * dy + dz * dz) < r_list) {
                pairs.emplace(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
        }
    }
    return pairs;
}

PairSet listed_pairs(const NeighborList& list) {
    PairSet out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::uint32_t j : list.row(i)) {
            const auto a = static_cast<std::uint32_t>(i);
            out.emplace(std::min(a, j), std::max(a, j));
        }
    }
    return out;
}

bool is_symmetric(const NeighborList& list) {
    PairSet directed;
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::uint32_t j : list.row(i)) {
            if (j == i || !directed.emplace(static_cast<std::uint32_t>(i), j).second) {
                return false;
            }
        }
    }
    for (const auto& [i, j] : directed) {
        if (!directed.contains({j, i})) {
            return false;
        }
    }
    return true;
}

double max_relative_force_error(ParticleState& state, const std::vector<long double>& reference) {
    const std::size_t n = state.size();
    const auto f = state.forces.read(Side::host);
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double fx = reference[i], fy = reference[n + i], fz = reference[2 * n + i];
        const long double norm = std::sqrt(fx * fx + fy * fy + fz * fz);
        for (int c = 0; c < 3; ++c) {
            const long double diff = std::fabs(static_cast<long double>(f[c * n + i]) - reference[c * n + i]);
            const long double err = norm > 0 ? diff / norm : diff;
            worst = std::max(worst, static_cast<double>(err));
        }
    }
    return worst;
}

}  // namespace portmd::verify
