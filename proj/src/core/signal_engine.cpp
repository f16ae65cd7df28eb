#include "portmd/core/signal_engine.hpp"

#include <string>

#include "portmd/core/error.hpp"

namespace portmd {

std::string_view to_string(Signal signal) noexcept {
    switch (signal) {
    case Signal::integrate: return "integrate";
    case Signal::force: return "force";
    case Signal::finalize: return "finalize";
    case Signal::sample: return "sample";
    }
    return "unknown";
}

SignalEngine::SignalEngine(std::uint64_t sample_interval) { set_sample_interval(sample_interval); }

void SignalEngine::set_sample_interval(std::uint64_t interval) {
    if (interval == 0) {
        throw ConfigError("sample interval must be positive");
    }
    sample_interval_ = interval;
}

void SignalEngine::connect(Signal signal, Slot slot) {
    slots_[static_cast<std::size_t>(signal)].push_back(std::move(slot));
}

std::size_t SignalEngine::slot_count(Signal signal) const noexcept {
    return slots_[static_cast<std::size_t>(signal)].size();
}

void SignalEngine::fire(Signal signal) {
    for (auto& slot : slots_[static_cast<std::size_t>(signal)]) {
        slot(step_);
    }
}

void SignalEngine::emit(Signal signal) { fire(signal); }

void SignalEngine::run_steps(std::uint64_t n_steps) {
    for (Signal mandatory : {Signal::integrate, Signal::force, Signal::finalize}) {
        if (slot_count(mandatory) == 0) {
            throw ConfigError("no slot connected to signal '" + std::string(to_string(mandatory)) + "'");
        }
    }
    if (n_steps == 0) {
        return;
    }
    if (sample_initial_ && step_ == 0) {
        fire(Signal::sample);
    }
    for (std::uint64_t k = 0; k < n_steps; ++k) {
        ++step_;
        fire(Signal::integrate);
        fire(Signal::force);
        fire(Signal::finalize);
        if (step_ % sample_interval_ == 0) {
            fire(Signal::sample);
        }
    }
}

}  // namespace portmd
