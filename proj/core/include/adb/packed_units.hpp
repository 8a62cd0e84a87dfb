#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace adb {

/// A sequence of fixed-width units (1..64 bits each) packed little-endian into
/// 64-bit words. Storage is always exactly ceil(size * width / 64) words:
/// every mutation that changes the word count reallocates to the exact size.
class PackedUnits {
  public:
    PackedUnits() = default;
    explicit PackedUnits(unsigned width, uint64_t count = 0);

    /// Parses a string of '0'/'1' characters into a width-1 sequence.
    static PackedUnits from_string(std::string_view bits);

    unsigned width() const { return width_; }
    uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    uint64_t bit_size() const { return size_ * width_; }
    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }
    /// Words actually reserved by the allocation (== words().size()).
    uint64_t storage_words() const { return words_.capacity(); }

    uint64_t get(uint64_t i) const { return read_bits(i * width_, width_); }
    void set(uint64_t i, uint64_t value) { write_bits(i * width_, width_, value); }

    void insert(uint64_t i, uint64_t value);
    uint64_t erase(uint64_t i);
    void push_back(uint64_t value) { insert(size_, value); }

    /// Appends units [from, from + count) of `src` (same width).
    void append(const PackedUnits& src, uint64_t from, uint64_t count);
    void append(const PackedUnits& src) { append(src, 0, src.size()); }
    /// Overwrites units [at, at + src.size()) with `src` (same width); no reallocation.
    void assign(uint64_t at, const PackedUnits& src);
    PackedUnits slice(uint64_t from, uint64_t count) const;

    /// Number of set bits in the first `bits` bits of the stream.
    uint64_t popcount_prefix(uint64_t bits) const;

    uint64_t read_bits(uint64_t offset, unsigned count) const;
    void write_bits(uint64_t offset, unsigned count, uint64_t value);

    std::string to_string() const;

    friend bool operator==(const PackedUnits& x, const PackedUnits& y);

  private:
    void resize_exact(uint64_t new_size);

    std::vector<uint64_t> words_;
    uint64_t size_ = 0;
    unsigned width_ = 1;
};

}  // namespace adb
