#pragma once

#include <cstdint>

namespace adb {

/// Structure-wide tuning constants, fixed between global rebuilds.
///
/// `log_n` is ceil(log2 n) at the last (re)build, floored at 4. Children of an
/// internal node number between a/4 and 4a, dynamic leaves hold b/4 to b bits,
/// and subtrees larger than `flatten_cap` are never flattened.
struct Params {
    unsigned log_n = 4;
    unsigned a = 16;
    uint64_t b = 16;
    uint64_t flatten_cap = 4;

    friend bool operator==(const Params&, const Params&) = default;
};

inline constexpr unsigned kMinLogN = 4;

/// ceil(log2 max(n, 16)).
unsigned ceil_log2_clamped(uint64_t n);

Params compute_params(unsigned log_n);

/// True once ceil(log2 n) has grown by one or shrunk by two since the last build.
constexpr bool rebuild_due(unsigned current_log_n, unsigned built_log_n) {
    return current_log_n >= built_log_n + 1 || current_log_n + 2 <= built_log_n;
}

}  // namespace adb
