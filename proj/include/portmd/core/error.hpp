#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace portmd {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid configuration, detected before any simulation work starts.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two particles sit on top of each other; the pair force diverges.
class SingularPairError : public std::runtime_error {
public:
    SingularPairError(std::uint32_t i, std::uint32_t j)
        : std::runtime_error("singular pair: particles " + std::to_string(i) + " and " +
                             std::to_string(j) + " overlap (r^2 = 0)"),
          first(i), second(j) {}

    std::uint32_t first;
    std::uint32_t second;
};

/// A neighbor list overflowed its stride and must be rebuilt before use.
class RebuildRequired : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Neighbor list kept overflowing after the stride retry budget was spent.
class OverflowAbort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace portmd
