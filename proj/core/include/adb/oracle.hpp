#pragma once

// Brute-force reference structures with the same 1-based contract as the
// adaptive ones. Everything is a flat vector and a linear scan.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adb/packed_units.hpp"

namespace adb::oracle {

class NaiveBits {
  public:
    NaiveBits() = default;
    explicit NaiveBits(std::string_view bits);
    explicit NaiveBits(const PackedUnits& bits);

    uint64_t size() const { return bits_.size(); }
    bool access(uint64_t i) const;
    uint64_t rank(bool bit, uint64_t i) const;
    std::optional<uint64_t> select(bool bit, uint64_t j) const;
    void insert(uint64_t i, bool bit);
    bool erase(uint64_t i);
    bool write(uint64_t i, bool bit);

    uint64_t count(bool bit) const { return rank(bit, size()); }
    PackedUnits packed() const;
    std::string to_string() const;

  private:
    std::vector<uint8_t> bits_;
};

class NaiveCells {
  public:
    explicit NaiveCells(unsigned width, std::vector<uint64_t> values = {});

    unsigned width() const { return width_; }
    uint64_t size() const { return cells_.size(); }
    uint64_t read(uint64_t i) const;
    uint64_t write(uint64_t i, uint64_t value);
    void insert(uint64_t i, uint64_t value);
    uint64_t erase(uint64_t i);
    const std::vector<uint64_t>& values() const { return cells_; }

  private:
    void check_value(uint64_t value) const;

    unsigned width_;
    std::vector<uint64_t> cells_;
};

class NaiveSeq {
  public:
    explicit NaiveSeq(uint64_t sigma, std::vector<uint64_t> symbols = {});

    uint64_t sigma() const { return sigma_; }
    uint64_t size() const { return symbols_.size(); }
    uint64_t access(uint64_t i) const;
    uint64_t rank(uint64_t c, uint64_t i) const;
    std::optional<uint64_t> select(uint64_t c, uint64_t j) const;
    void insert(uint64_t i, uint64_t c);
    uint64_t erase(uint64_t i);
    const std::vector<uint64_t>& symbols() const { return symbols_; }

  private:
    void check_symbol(uint64_t c) const;

    uint64_t sigma_;
    std::vector<uint64_t> symbols_;
};

}  // namespace adb::oracle
