#include "adb/params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace adb {

namespace {

unsigned ceil_sqrt(unsigned x) {
    unsigned r = 0;
    while (r * r < x) ++r;
    return r;
}

}  // namespace

unsigned ceil_log2_clamped(uint64_t n) {
    n = std::max<uint64_t>(n, 16);
    return static_cast<unsigned>(std::bit_width(n - 1));
}

Params compute_params(unsigned log_n) {
    Params p;
    p.log_n = std::max(log_n, kMinLogN);
    const uint64_t L = p.log_n;
    p.a = std::max(16u, ceil_sqrt(p.log_n));
    // floor(log2 log_n), clamped to at least 1.
    const uint64_t loglog = std::max<uint64_t>(1, std::bit_width(L) - 1);
    const uint64_t denom = 16 * loglog;
    p.b = 16 * ((L * L + denom - 1) / denom);
    // floor(2^L / L); 2^64 needs 128-bit intermediate.
    const unsigned __int128 pow = static_cast<unsigned __int128>(1) << std::min<uint64_t>(L, 127);
    const unsigned __int128 cap = pow / L;
    p.flatten_cap = cap > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(cap);
    return p;
}

}  // namespace adb
