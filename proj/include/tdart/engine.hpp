#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace tdart {

enum class SearchOrder { Fifo, Lifo };

enum class RunStatus { Complete, Timeout, StoredCap };

struct ReachLimits {
    std::uint64_t max_stored = 10'000'000;
    std::chrono::milliseconds timeout{300'000};
};

struct ReachResult {
    bool reachable = false; // meaningful only when status == Complete
    RunStatus status = RunStatus::Complete;
    std::uint64_t discovered = 0; // store attempts, duplicates included
    std::uint64_t stored = 0;     // structure size when the run ended
    std::uint64_t iterations = 0; // main loop bodies executed
    std::chrono::nanoseconds elapsed{0};
};

// Thrown by helpers that have no status channel of their own.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tdart
