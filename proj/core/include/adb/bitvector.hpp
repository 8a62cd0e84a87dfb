#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adb/leaf.hpp"
#include "adb/packed_units.hpp"
#include "adb/params.hpp"
#include "adb/stats.hpp"
#include "adb/tree.hpp"

namespace adb {

/// Dynamic bitvector whose query-hot regions turn into static, constant-time
/// leaves and turn back into dynamic subtrees when updated.
///
/// Positions are 1-based: access(i) reads B[i], rank(b, i) counts b in B[1..i],
/// select(b, j) is the position of the j-th b. Out-of-range positions throw
/// std::out_of_range; select past the last occurrence returns std::nullopt.
/// Queries mutate internal counters, so no operation is safe to run
/// concurrently with another on the same instance.
class AdaptiveBitvector {
  public:
    AdaptiveBitvector();
    /// Bulk-loads `bits` (width 1) without per-bit insertion.
    static AdaptiveBitvector from_bits(PackedUnits bits);
    static AdaptiveBitvector from_string(std::string_view bits) { return from_bits(PackedUnits::from_string(bits)); }

    uint64_t size() const { return tree_.size(); }
    /// Occurrences of `bit` in the whole vector; answered from the root, not a query.
    uint64_t count(bool bit) const { return bit ? tree_.ones() : tree_.size() - tree_.ones(); }

    bool access(uint64_t i);
    uint64_t rank(bool bit, uint64_t i);
    std::optional<uint64_t> select(bool bit, uint64_t j);
    /// B[i] together with rank1(i - 1), in one descent (one query).
    std::pair<bool, uint64_t> access_rank(uint64_t i);

    void insert(uint64_t i, bool bit) { insert_rank(i, bit); }
    bool erase(uint64_t i) { return erase_rank(i).first; }
    bool write(uint64_t i, bool bit);
    /// Inserts and returns rank1(i - 1) taken before the insertion.
    uint64_t insert_rank(uint64_t i, bool bit);
    /// Deletes B[i]; returns it with rank1(i - 1).
    std::pair<bool, uint64_t> erase_rank(uint64_t i);

    const Params& params() const { return params_; }
    LifetimeStats stats() const;
    SpaceReport space_report() const;
    std::vector<std::string> check() const;

    PackedUnits bits() const { return tree_.flatten_all(); }
    /// Immutable read-only copy of the payload.
    StaticLeaf frozen() const { return StaticLeaf(tree_.flatten_all()); }

    const Tree& tree() const { return tree_; }
    Tree& tree() { return tree_; }
    void set_observer(std::function<void(const TreeEvent&)> observer) { tree_.set_observer(std::move(observer)); }

  private:
    explicit AdaptiveBitvector(PackedUnits bits, Params params);
    void after_update();

    Params params_;
    Tree tree_;
    uint64_t queries_ = 0;
    uint64_t updates_ = 0;
    uint64_t rebuilds_ = 0;
};

Geometry bit_geometry(const Params& params);
SpaceReport make_space_report(const SpaceBreakdown& breakdown);

}  // namespace adb
