#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adb/packed_units.hpp"

namespace adb {

// Positions are 0-based; rank1(i) counts ones in [0, i); select(bit, j) takes a
// 1-based occurrence number and returns a 0-based position.

/// Mutable leaf scanned word by word on rank/select. Holds bits (width 1) or
/// fixed-width cells; rank/select are only meaningful for width 1.
class DynamicLeaf {
  public:
    DynamicLeaf() = default;
    explicit DynamicLeaf(unsigned width) : units_(width) {}
    explicit DynamicLeaf(PackedUnits units) : units_(std::move(units)) {}

    uint64_t size() const { return units_.size(); }
    const PackedUnits& units() const { return units_; }

    uint64_t access(uint64_t i) const { return units_.get(i); }
    uint64_t rank1(uint64_t i) const { return units_.popcount_prefix(i); }
    uint64_t ones() const { return units_.popcount_prefix(units_.size()); }
    std::optional<uint64_t> select(bool bit, uint64_t j) const;

    void insert(uint64_t i, uint64_t value) { units_.insert(i, value); }
    uint64_t erase(uint64_t i) { return units_.erase(i); }
    uint64_t write(uint64_t i, uint64_t value) {
        const uint64_t previous = units_.get(i);
        units_.set(i, value);
        return previous;
    }

    PackedUnits release() && { return std::move(units_); }

  private:
    PackedUnits units_;
};

/// Immutable bit leaf with a two-level rank directory (512-bit superblocks with
/// absolute counts, 64-bit blocks with 9-bit relative counts) and select
/// samples every 512 occurrences. Unindexed leaves (cells) have no directory
/// and may be overwritten in place.
class StaticLeaf {
  public:
    static constexpr uint64_t kSuperblockBits = 512;
    static constexpr uint64_t kSelectSample = 512;

    StaticLeaf() = default;
    /// Builds the rank/select index when `index` is set and the units are bits.
    explicit StaticLeaf(PackedUnits units, bool index = true);

    uint64_t size() const { return units_.size(); }
    const PackedUnits& units() const { return units_; }
    bool indexed() const { return indexed_; }

    uint64_t access(uint64_t i) const { return units_.get(i); }
    uint64_t ones() const { return ones_; }
    uint64_t rank1(uint64_t i) const;
    std::optional<uint64_t> select(bool bit, uint64_t j) const;

    /// In-place overwrite; only valid for unindexed (cell) leaves.
    uint64_t write(uint64_t i, uint64_t value);

    /// Bits spent on the directory and samples.
    uint64_t index_bits() const { return 64 * (directory_.size() + select1_samples_.size() + select0_samples_.size()); }

    /// Recomputes everything by scanning and reports whether the cached index agrees.
    bool consistent() const;

    PackedUnits release() && { return std::move(units_); }

  private:
    uint64_t superblocks() const { return directory_.size() / 2; }
    uint64_t ones_before(uint64_t sb) const { return directory_[2 * sb]; }
    uint64_t count_before(bool bit, uint64_t sb) const;
    uint64_t block_count(bool bit, uint64_t sb, unsigned block) const;

    PackedUnits units_;
    bool indexed_ = false;
    uint64_t ones_ = 0;
    // Interleaved per superblock: [absolute ones before it, packed relative block counts].
    // One trailing sentinel superblock holds the total.
    std::vector<uint64_t> directory_;
    std::vector<uint64_t> select1_samples_;
    std::vector<uint64_t> select0_samples_;
};

}  // namespace adb
