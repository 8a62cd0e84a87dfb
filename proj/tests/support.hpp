#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adb/packed_units.hpp"

namespace adb::test {

inline PackedUnits random_bits(uint64_t n, uint64_t seed, double density = 0.5) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    PackedUnits bits(1, n);
    for (uint64_t i = 0; i < n; ++i) bits.set(i, coin(rng) ? 1 : 0);
    return bits;
}

inline std::vector<uint64_t> random_cells(uint64_t n, unsigned width, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const uint64_t mask = width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
    std::vector<uint64_t> out(n);
    for (auto& v : out) v = rng() & mask;
    return out;
}

inline std::vector<uint64_t> random_symbols(uint64_t n, uint64_t sigma, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(1, sigma);
    std::vector<uint64_t> out(n);
    for (auto& c : out) c = pick(rng);
    return out;
}

/// Uniform integer in [lo, hi].
inline uint64_t uniform(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
    return std::uniform_int_distribution<uint64_t>(lo, hi)(rng);
}

inline std::string join(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& line : lines) out += line + "\n";
    return out;
}

}  // namespace adb::test
