#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adb/packed_units.hpp"

namespace adb {

/// Shape constants of one tree generation, in units (bits or cells).
struct Geometry {
    unsigned arity = 16;        ///< a: internal nodes have a/4..4a children
    uint64_t leaf_cap = 16;     ///< dynamic leaves hold leaf_cap/4..leaf_cap units
    uint64_t flatten_cap = 4;   ///< subtrees larger than this are never flattened
    unsigned entry_bits = 4;    ///< logical width of one node field, for space accounting

    /// a^level * leaf_cap, saturating.
    uint64_t level_cap(unsigned level) const;
};

struct TreeStats {
    uint64_t query_visits = 0;   ///< internal nodes traversed by queries
    uint64_t update_visits = 0;  ///< internal nodes traversed by updates
    uint64_t flatten_count = 0;
    uint64_t flatten_units = 0;
    uint64_t split_count = 0;    ///< static leaves expanded back into subtrees
    uint64_t split_units = 0;
    uint64_t leaf_splits = 0;
    uint64_t leaf_merges = 0;
    uint64_t node_cuts = 0;
    uint64_t node_merges = 0;
};

struct TreeEvent {
    enum class Kind { Flatten, Split, LeafSplit, LeafMerge, NodeCut, NodeMerge };
    Kind kind;
    unsigned level;
    uint64_t size;        ///< units in the node(s) before the event
    uint64_t left = 0;    ///< size of the first resulting node
    uint64_t right = 0;   ///< size of the second resulting node, 0 if only one
};

enum class NodeKind { Internal, Dynamic, Static };

/// Bits carry ones counts and rank/select indexes; cells are plain values.
enum class UnitKind { Bits, Cells };

/// Read-only snapshot of one node, for tests and diagnostics.
struct NodeInfo {
    NodeKind kind;
    unsigned level;
    uint64_t size;
    uint64_t ones;
    uint64_t queries;   ///< internal nodes only
    std::size_t arity;  ///< internal nodes only
};

struct SpaceBreakdown {
    uint64_t payload_bits = 0;
    uint64_t dynamic_leaf_slack_bits = 0;
    uint64_t static_index_bits = 0;   ///< rank/select directories plus static word slack
    uint64_t internal_node_bits = 0;
};

/// Adaptive weight-balanced B-tree over a sequence of fixed-width units.
///
/// Over bits the tree is a bitvector: nodes keep per-child ones counts and
/// static leaves carry rank/select directories. Over cells only sizes are
/// kept and static leaves are plain, in-place writable payloads.
///
/// Every query increments the counter of each internal node it traverses and
/// then flattens the shallowest node on its path whose counter reached its
/// size (if that size is within the flatten cap). Every update resets the
/// counters on its path and splits any static leaf it meets.
///
/// Positions are 0-based. rank1(i) counts ones in [0, i). select takes a
/// 1-based occurrence number and returns a 0-based position.
class Tree {
  public:
    /// Width 1 defaults to bits, wider units are always cells.
    Tree(unsigned width, Geometry geometry, UnitKind kind = UnitKind::Bits);
    Tree(PackedUnits payload, Geometry geometry, UnitKind kind = UnitKind::Bits);
    Tree(Tree&&) noexcept;
    Tree& operator=(Tree&&) noexcept;
    ~Tree();

    unsigned width() const { return width_; }
    bool bit_mode() const { return bit_mode_; }
    uint64_t size() const { return size_; }
    /// Ones in the whole sequence (bit mode), read from the root aggregate.
    uint64_t ones() const;
    const Geometry& geometry() const { return geometry_; }

    // Queries: counted, may flatten.
    uint64_t access(uint64_t pos);
    struct BitAndRank {
        bool bit;
        uint64_t rank1;  ///< ones strictly before pos
    };
    BitAndRank access_rank(uint64_t pos);
    uint64_t rank1(uint64_t pos);
    std::optional<uint64_t> select(bool bit, uint64_t j);
    /// Cell mode: overwrite in place with query semantics. Returns the previous value.
    uint64_t write_cell(uint64_t pos, uint64_t value);

    // Updates: reset counters, split static leaves, rebalance.
    struct UpdateResult {
        uint64_t value;  ///< removed or previous value (insert: the inserted value)
        uint64_t rank1;  ///< bit mode: ones strictly before pos, before the update
    };
    UpdateResult insert(uint64_t pos, uint64_t value);
    UpdateResult erase(uint64_t pos);
    UpdateResult write(uint64_t pos, uint64_t value);

    /// Concatenated payload; the tree is not modified.
    PackedUnits flatten_all() const;
    /// Reloads the current payload into a fresh tree with new geometry.
    void rebuild(Geometry geometry);

    /// Every invariant breach found by a full structural walk, or empty.
    std::vector<std::string> validate() const;
    SpaceBreakdown space() const;

    const TreeStats& stats() const { return stats_; }
    void set_observer(std::function<void(const TreeEvent&)> observer) { observer_ = std::move(observer); }

    NodeInfo root_info() const;
    /// Children of the internal node reached by following child indexes `path` from the root.
    std::vector<NodeInfo> children_info(std::span<const std::size_t> path = {}) const;
    /// Internal nodes an access to `pos` would traverse, top-down. Does not count as a query.
    std::vector<NodeInfo> path_info(uint64_t pos) const;

    /// Test hook: overwrite the cached size entry of child `k` under the node at `path`.
    void corrupt_sum_for_testing(std::span<const std::size_t> path, std::size_t k, uint64_t size);

    struct Node;

  private:
    enum class QueryKind { Access, AccessRank, Rank1, Select0, Select1, WriteCell };
    enum class UpdateKind { Insert, Erase, Write };
    struct QueryAnswer {
        uint64_t value = 0;
        uint64_t rank = 0;
    };
    struct PathEntry {
        std::unique_ptr<Node>* slot;
        uint64_t size;
    };

    QueryAnswer query(QueryKind kind, uint64_t arg, uint64_t value = 0);
    void maybe_flatten();
    UpdateResult update(UpdateKind kind, uint64_t pos, uint64_t value);
    UpdateResult update_node(std::unique_ptr<Node>& slot, UpdateKind kind, uint64_t pos, uint64_t value, bool is_root);
    void fix_child(Node& parent, std::size_t k);
    void fix_root();
    void split_leaf(Node& parent, std::size_t k);
    void merge_leaves(Node& parent, std::size_t k);
    void cut_node(Node& parent, std::size_t k);
    void merge_nodes(Node& parent, std::size_t k);

    std::unique_ptr<Node> make_dynamic(PackedUnits units) const;
    std::unique_ptr<Node> make_static(PackedUnits units, unsigned level) const;
    std::unique_ptr<Node> make_internal(unsigned level, std::vector<std::unique_ptr<Node>> children) const;
    std::unique_ptr<Node> build_filled(const PackedUnits& payload, uint64_t from, uint64_t count, unsigned level, bool is_root) const;
    std::unique_ptr<Node> build_split(const PackedUnits& payload, uint64_t from, uint64_t count, unsigned level,
                                      std::optional<uint64_t> target, bool is_root) const;
    std::unique_ptr<Node> bulk_load(const PackedUnits& payload) const;
    std::vector<std::unique_ptr<Node>> halve(std::unique_ptr<Node> node) const;
    void collect(const Node& node, PackedUnits& out, uint64_t& at) const;
    const Node& node_at(std::span<const std::size_t> path) const;
    NodeInfo info(const Node& node) const;
    void emit(TreeEvent::Kind kind, unsigned level, uint64_t size, const std::vector<std::unique_ptr<Node>>* parts = nullptr);

    struct Checked {
        uint64_t size;
        uint64_t ones;
    };
    Checked check(const Node& node, const std::string& where, bool is_root, std::vector<std::string>& out) const;
    void account(const Node& node, SpaceBreakdown& out) const;

    unsigned width_;
    bool bit_mode_;
    Geometry geometry_;
    std::unique_ptr<Node> root_;
    uint64_t size_ = 0;
    TreeStats stats_;
    std::vector<PathEntry> path_;
    std::function<void(const TreeEvent&)> observer_;
};

}  // namespace adb
