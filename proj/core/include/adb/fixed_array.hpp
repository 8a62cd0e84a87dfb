#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adb/params.hpp"
#include "adb/stats.hpp"
#include "adb/tree.hpp"

namespace adb {

/// Adaptive dynamic array of `width`-bit cells, 1-based.
///
/// read and write are both queries: they bump node counters, may flatten, and
/// write goes straight into static leaves. Only insert and erase are updates.
class AdaptiveArray {
  public:
    explicit AdaptiveArray(unsigned width);
    static AdaptiveArray from_values(unsigned width, const std::vector<uint64_t>& values);

    unsigned width() const { return tree_.width(); }
    uint64_t size() const { return tree_.size(); }

    uint64_t read(uint64_t i);
    uint64_t write(uint64_t i, uint64_t value);
    void insert(uint64_t i, uint64_t value);
    uint64_t erase(uint64_t i);

    const Params& params() const { return params_; }
    LifetimeStats stats() const;
    SpaceReport space_report() const;
    std::vector<std::string> check() const;
    std::vector<uint64_t> values() const;

    const Tree& tree() const { return tree_; }
    void set_observer(std::function<void(const TreeEvent&)> observer) { tree_.set_observer(std::move(observer)); }

  private:
    AdaptiveArray(unsigned width, PackedUnits cells, Params params);
    void check_value(uint64_t value) const;
    void after_update();

    Params params_;
    Tree tree_;
    uint64_t queries_ = 0;
    uint64_t updates_ = 0;
    uint64_t rebuilds_ = 0;
};

/// Leaf capacity in cells: max(4, floor(64 * b / log_n / width)).
Geometry array_geometry(const Params& params, unsigned width);

}  // namespace adb
