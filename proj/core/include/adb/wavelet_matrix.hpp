#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adb/bitvector.hpp"

namespace adb {

/// Dynamic sequence over [1, sigma] stored as ceil(log2 sigma) adaptive
/// bitvectors, level 0 holding the most significant bit of (symbol - 1).
/// Every sequence operation issues exactly one bitvector operation per level,
/// so each level sees the same query/update mix as the sequence.
class AdaptiveWaveletMatrix {
  public:
    explicit AdaptiveWaveletMatrix(uint64_t sigma);
    static AdaptiveWaveletMatrix from_symbols(uint64_t sigma, const std::vector<uint64_t>& symbols);

    uint64_t sigma() const { return sigma_; }
    uint64_t size() const { return size_; }
    unsigned levels() const { return static_cast<unsigned>(levels_.size()); }
    const AdaptiveBitvector& level(unsigned d) const { return levels_[d]; }
    uint64_t zeros_at(unsigned d) const { return zeros_[d]; }
    /// Occurrences of `c` in the whole sequence, without touching the levels.
    uint64_t count(uint64_t c) const;

    uint64_t access(uint64_t i);
    uint64_t rank(uint64_t c, uint64_t i);
    std::optional<uint64_t> select(uint64_t c, uint64_t j);
    void insert(uint64_t i, uint64_t c);
    uint64_t erase(uint64_t i);

    /// Decodes the whole sequence from level payloads; counts as no query.
    std::vector<uint64_t> symbols() const;
    std::vector<std::string> check() const;
    /// Receives the events of every level, tagged with the level index.
    void set_observer(const std::function<void(unsigned, const TreeEvent&)>& observer);

  private:
    void require_symbol(uint64_t c) const;
    bool code_bit(uint64_t c, unsigned d) const { return (((c - 1) >> (levels() - 1 - d)) & 1) != 0; }
    uint64_t order_key(uint64_t c) const;
    uint64_t block_start(uint64_t c) const;
    void add_count(uint64_t c, int64_t delta);

    uint64_t sigma_;
    uint64_t size_ = 0;
    std::vector<AdaptiveBitvector> levels_;
    std::vector<uint64_t> zeros_;
    std::vector<uint64_t> counts_;          ///< per symbol
    std::vector<int64_t> order_fenwick_;    ///< counts indexed by bit-reversed code
};

}  // namespace adb
