#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace adb::broadword {

inline constexpr unsigned kWordBits = 64;

constexpr uint64_t low_mask(unsigned bits) {
    return bits >= kWordBits ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

constexpr uint64_t words_for(uint64_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace detail {

// kSelectInByte[b * 8 + j] = position of the (j+1)-th set bit of byte b, or 8.
constexpr std::array<uint8_t, 256 * 8> make_select_in_byte() {
    std::array<uint8_t, 256 * 8> table{};
    for (unsigned b = 0; b < 256; ++b) {
        unsigned seen = 0;
        for (unsigned j = 0; j < 8; ++j) table[b * 8 + j] = 8;
        for (unsigned p = 0; p < 8; ++p) {
            if ((b >> p) & 1u) table[b * 8 + seen++] = static_cast<uint8_t>(p);
        }
    }
    return table;
}

inline constexpr auto kSelectInByte = make_select_in_byte();

}  // namespace detail

/// Position (0-based, from the least significant bit) of the (rank+1)-th set
/// bit of `word`. Requires rank < popcount(word).
inline unsigned select_in_word(uint64_t word, unsigned rank) {
    unsigned shift = 0;
    for (;;) {
        auto byte = static_cast<unsigned>((word >> shift) & 0xFF);
        auto ones = static_cast<unsigned>(std::popcount(byte));
        if (rank < ones) return shift + detail::kSelectInByte[byte * 8 + rank];
        rank -= ones;
        shift += 8;
    }
}

inline unsigned rank_in_word(uint64_t word, unsigned bits) {
    return static_cast<unsigned>(std::popcount(word & low_mask(bits)));
}

}  // namespace adb::broadword
