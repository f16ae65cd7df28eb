#include "portmd/backend/backend.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "portmd/core/error.hpp"

namespace portmd {

std::string_view to_string(BackendKind kind) noexcept {
    return kind == BackendKind::sequential ? "sequential" : "parallel";
}

BackendKind parse_backend_kind(std::string_view text) {
    if (text == "sequential") {
        return BackendKind::sequential;
    }
    if (text == "parallel") {
        return BackendKind::parallel;
    }
    throw ConfigError("unknown backend '" + std::string(text) + "' (expected sequential|parallel)");
}

Backend::Backend(BackendSelector selector) : selector_(selector) {
    if (selector_.chunk_size == 0) {
        throw ConfigError("chunk_size must be positive");
    }
    if (selector_.kind == BackendKind::sequential) {
        kernels_ = &kernel_table(SimdLevel::scalar);
        return;
    }
    if (selector_.worker_count == 0) {
        throw ConfigError("worker_count must be positive");
    }
    kernels_ = &kernel_table(selector_.simd);
    pool_ = std::make_unique<ThreadPool>(selector_.worker_count);
}

std::size_t Backend::chunk_count(std::size_t n) const noexcept {
    return (n + selector_.chunk_size - 1) / selector_.chunk_size;
}

void Backend::for_each_chunk(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    const std::size_t size = selector_.chunk_size;
    for_each_item(chunk_count(n), [&](std::size_t c) { body(c, c * size, std::min(n, (c + 1) * size)); });
}

void Backend::for_each_item(std::size_t items, const std::function<void(std::size_t)>& body) {
    if (!pool_ || pool_->size() == 1 || items <= 1) {
        for (std::size_t c = 0; c < items; ++c) {
            body(c);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    pool_->run([&](unsigned) {
        for (std::size_t c = next.fetch_add(1, std::memory_order_relaxed); c < items;
             c = next.fetch_add(1, std::memory_order_relaxed)) {
            body(c);
        }
    });
}

}  // namespace portmd
