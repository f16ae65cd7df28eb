#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace portmd {

enum class Signal { integrate, force, finalize, sample };

std::string_view to_string(Signal signal) noexcept;

/// Drives a simulation by emitting signals in a fixed order.
///
/// Each step emits integrate, force and finalize; sample follows on steps
/// where `step % sample_interval == 0`. The step counter is incremented
/// before the step's signals fire, so the first step is step 1. Slots on
/// one signal fire in the order they were connected.
class SignalEngine {
public:
    using Slot = std::function<void(std::uint64_t step)>;

    explicit SignalEngine(std::uint64_t sample_interval = 1);

    void connect(Signal signal, Slot slot);
    std::size_t slot_count(Signal signal) const noexcept;

    /// Fires every slot of `signal` once, outside the step sequence.
    void emit(Signal signal);

    /// Advances the step counter by `n_steps`. Throws ConfigError before
    /// running anything if integrate, force or finalize has no slot.
    void run_steps(std::uint64_t n_steps);

    std::uint64_t step() const noexcept { return step_; }
    std::uint64_t sample_interval() const noexcept { return sample_interval_; }
    void set_sample_interval(std::uint64_t interval);

    /// When set, `run_steps` emits sample once before the first step if the
    /// counter is still at zero. Off by default.
    void set_sample_initial(bool enabled) noexcept { sample_initial_ = enabled; }
    bool sample_initial() const noexcept { return sample_initial_; }

private:
    void fire(Signal signal);

    std::array<std::vector<Slot>, 4> slots_;
    std::uint64_t step_ = 0;
    std::uint64_t sample_interval_;
    bool sample_initial_ = false;
};

}  // namespace portmd
