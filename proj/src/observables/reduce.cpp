#include <vector>

#include "portmd/observables/observables.hpp"

namespace portmd {

namespace {

constexpr std::size_t leaf_size = 8;
// Subtrees at this depth are evaluated independently by the workers.
constexpr unsigned parallel_depth = 6;

template <class T>
T pairwise(const T* data, std::size_t count) {
    if (count <= leaf_size) {
        T sum = 0;
        for (std::size_t i = 0; i < count; ++i) {
            sum += data[i];
        }
        return sum;
    }
    const std::size_t half = count / 2;
    return pairwise(data, half) + pairwise(data + half, count - half);
}

struct Range {
    std::size_t begin;
    std::size_t count;
};

// In-order list of the nodes where the parallel split stops: either a node
// at `parallel_depth` or a leaf reached earlier.
void collect_frontier(std::size_t begin, std::size_t count, unsigned depth, std::vector<Range>& out) {
    if (count <= leaf_size || depth == parallel_depth) {
        out.push_back({begin, count});
        return;
    }
    const std::size_t half = count / 2;
    collect_frontier(begin, half, depth + 1, out);
    collect_frontier(begin + half, count - half, depth + 1, out);
}

template <class T>
T combine_frontier(std::size_t count, unsigned depth, const std::vector<T>& partial, std::size_t& next) {
    if (count <= leaf_size || depth == parallel_depth) {
        return partial[next++];
    }
    const std::size_t half = count / 2;
    const T left = combine_frontier(half, depth + 1, partial, next);
    const T right = combine_frontier(count - half, depth + 1, partial, next);
    return left + right;
}

template <class T>
T reduce_impl(std::span<const T> values, ReduceMode mode, Backend* backend) {
    const std::size_t n = values.size();
    const bool threaded = backend != nullptr && backend->workers() > 1;

    if (mode == ReduceMode::fast) {
        if (backend == nullptr) {
            T sum = 0;
            for (T v : values) {
                sum += v;
            }
            return sum;
        }
        std::vector<T> partial(backend->chunk_count(n), T(0));
        backend->for_each_chunk(n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            T sum = 0;
            for (std::size_t i = begin; i < end; ++i) {
                sum += values[i];
            }
            partial[chunk] = sum;
        });
        T sum = 0;
        for (T p : partial) {
            sum += p;
        }
        return sum;
    }

    if (!threaded || n <= leaf_size) {
        return pairwise(values.data(), n);
    }
    std::vector<Range> frontier;
    collect_frontier(0, n, 0, frontier);
    std::vector<T> partial(frontier.size());
    backend->for_each_item(frontier.size(), [&](std::size_t node) {
        partial[node] = pairwise(values.data() + frontier[node].begin, frontier[node].count);
    });
    std::size_t next = 0;
    return combine_frontier(n, 0, partial, next);
}

}  // namespace

double reduce_sum(std::span<const double> values, ReduceMode mode, Backend* backend) {
    return reduce_impl(values, mode, backend);
}

float reduce_sum(std::span<const float> values, ReduceMode mode, Backend* backend) {
    return reduce_impl(values, mode, backend);
}

}  // namespace portmd
