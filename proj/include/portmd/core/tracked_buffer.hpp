#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace portmd {

enum class Side { host, compute };

enum class Validity { host, compute, both };

/// A particle array held twice: once for host-side code (I/O, observables,
/// tests) and once for the compute kernels. Every access goes through
/// `read` or `write`, which keep track of which copy is current and copy
/// lazily when the other side is asked for stale data.
///
/// The two copies are always distinct allocations, so the synchronization
/// logic runs the same way it would against real device memory.
template <class T>
class TrackedBuffer {
public:
    TrackedBuffer() = default;
    explicit TrackedBuffer(std::size_t size, T fill = T{}) : host_(size, fill), compute_(size, fill) {}

    std::size_t size() const noexcept { return host_.size(); }
    std::uint64_t version() const noexcept { return version_; }
    Validity valid_on() const noexcept { return valid_; }
    /// Number of host<->compute transfers performed so far.
    std::uint64_t transfer_count() const noexcept { return transfers_; }

    /// Read access. Synchronizes `side` first if it is stale; never bumps the version.
    std::span<const T> read(Side side) {
        synchronize(side);
        return storage(side);
    }

    /// Read-modify-write access. The returned view holds current data; the
    /// other side becomes stale.
    std::span<T> write(Side side) {
        synchronize(side);
        return mark_written(side);
    }

    /// Write access for a caller that overwrites every element; skips the
    /// transfer a stale side would otherwise need.
    std::span<T> write_discard(Side side) { return mark_written(side); }

    /// Both copies are current afterwards.
    void synchronize_all() {
        synchronize(Side::host);
        synchronize(Side::compute);
    }

private:
    std::vector<T>& storage(Side side) { return side == Side::host ? host_ : compute_; }

    void synchronize(Side side) {
        const bool stale = (side == Side::host && valid_ == Validity::compute) ||
                           (side == Side::compute && valid_ == Validity::host);
        if (stale) {
            const auto& source = side == Side::host ? compute_ : host_;
            std::copy(source.begin(), source.end(), storage(side).begin());
            valid_ = Validity::both;
            ++transfers_;
        }
    }

    std::span<T> mark_written(Side side) {
        ++version_;
        valid_ = side == Side::host ? Validity::host : Validity::compute;
        return storage(side);
    }

    std::vector<T> host_;
    std::vector<T> compute_;
    std::uint64_t version_ = 0;
    std::uint64_t transfers_ = 0;
    Validity valid_ = Validity::both;
};

}  // namespace portmd
