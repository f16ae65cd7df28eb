#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string_view>

#include "portmd/backend/kernels.hpp"
#include "portmd/backend/thread_pool.hpp"

namespace portmd {

enum class BackendKind { sequential, parallel };

std::string_view to_string(BackendKind kind) noexcept;
BackendKind parse_backend_kind(std::string_view text);

/// How kernels are executed.
///
/// `sequential` is the reference: scalar kernels on the calling thread, in
/// index order. `parallel` maps kernels over contiguous chunks of
/// `chunk_size` particles on `worker_count` threads using the SIMD kernels
/// picked by `simd`. With `deterministic` set, every result is independent of
/// worker count and identical to the sequential backend.
struct BackendSelector {
    BackendKind kind = BackendKind::sequential;
    unsigned worker_count = 1;
    std::size_t chunk_size = 256;
    bool deterministic = true;
    SimdLevel simd = SimdLevel::automatic;

    static BackendSelector sequential() { return {}; }
    static BackendSelector parallel(unsigned workers, bool deterministic = true) {
        return {BackendKind::parallel, workers, 256, deterministic, SimdLevel::automatic};
    }
};

class Backend {
public:
    /// Throws ConfigError for a zero worker count or chunk size, or an
    /// unavailable SIMD level.
    explicit Backend(BackendSelector selector = {});

    const BackendSelector& selector() const noexcept { return selector_; }
    BackendKind kind() const noexcept { return selector_.kind; }
    bool deterministic() const noexcept { return selector_.deterministic; }
    unsigned workers() const noexcept { return pool_ ? pool_->size() : 1; }
    const KernelTable& kernels() const noexcept { return *kernels_; }

    std::size_t chunk_count(std::size_t n) const noexcept;

    /// Calls body(chunk, begin, end) once for every chunk of [0, n). Chunks
    /// are independent; which worker runs which chunk is unspecified.
    void for_each_chunk(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

    /// Calls body(item) once for every item in [0, items), one item per task.
    void for_each_item(std::size_t items, const std::function<void(std::size_t)>& body);

private:
    BackendSelector selector_;
    const KernelTable* kernels_;
    std::unique_ptr<ThreadPool> pool_;
};

}  // namespace portmd
