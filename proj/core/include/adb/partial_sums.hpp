#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace adb {

enum class SumField { Size, Ones, Zeros };

/// Per-child aggregates of an internal node. Zeros are derived as size - ones.
/// Prefix sums and searches scan linearly; a node has at most 4a children.
class PartialSums {
  public:
    struct Route {
        std::size_t child;  ///< 0-based child index
        uint64_t consumed;  ///< sum of the field over children before `child`
    };

    PartialSums() = default;
    explicit PartialSums(bool track_ones) : track_ones_(track_ones) {}

    bool tracks_ones() const { return track_ones_; }
    std::size_t count() const { return sizes_.size(); }

    uint64_t get(SumField field, std::size_t k) const;
    uint64_t size(std::size_t k) const { return sizes_[k]; }
    uint64_t ones(std::size_t k) const { return track_ones_ ? ones_[k] : 0; }

    /// Sum of `field` over the first k children.
    uint64_t prefix(SumField field, std::size_t k) const;
    uint64_t total(SumField field) const { return prefix(field, count()); }

    /// Smallest child whose inclusive prefix sum reaches `target` (target >= 1).
    std::optional<Route> route(SumField field, uint64_t target) const;

    void insert(std::size_t k, uint64_t size, uint64_t ones);
    void erase(std::size_t k);
    void assign(std::size_t k, uint64_t size, uint64_t ones);
    void adjust(std::size_t k, int64_t size_delta, int64_t ones_delta);

  private:
    std::vector<uint64_t> sizes_;
    std::vector<uint64_t> ones_;
    bool track_ones_ = true;
};

}  // namespace adb
