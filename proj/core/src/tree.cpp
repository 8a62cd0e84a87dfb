#include "adb/tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <variant>

#include "adb/broadword.hpp"
#include "adb/leaf.hpp"
#include "adb/partial_sums.hpp"

namespace adb {

struct Tree::Node {
    struct Internal {
        unsigned level;
        std::vector<std::unique_ptr<Node>> children;
        PartialSums sums;
        uint64_t queries = 0;
    };
    struct Static {
        StaticLeaf leaf;
        unsigned level;
    };
    std::variant<DynamicLeaf, Static, Internal> body;
};

namespace {

using NodePtr = std::unique_ptr<Tree::Node>;
using Internal = Tree::Node::Internal;
using Static = Tree::Node::Static;

uint64_t ceil_div(unsigned __int128 num, unsigned __int128 den) { return static_cast<uint64_t>((num + den - 1) / den); }

// Number of parts so that each holds about 3/4 of `unit`.
uint64_t three_quarter_parts(uint64_t count, uint64_t unit) {
    return std::max<uint64_t>(1, ceil_div(static_cast<unsigned __int128>(count) * 4, static_cast<unsigned __int128>(unit) * 3));
}

uint64_t part_size(uint64_t count, uint64_t parts, uint64_t j) { return count / parts + (j < count % parts ? 1 : 0); }

uint64_t node_size(const Tree::Node& node) {
    return std::visit(
        [](const auto& body) -> uint64_t {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, DynamicLeaf>) return body.size();
            else if constexpr (std::is_same_v<T, Static>) return body.leaf.size();
            else return body.sums.total(SumField::Size);
        },
        node.body);
}

uint64_t node_ones(const Tree::Node& node, bool bit_mode) {
    if (!bit_mode) return 0;
    return std::visit(
        [](const auto& body) -> uint64_t {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, DynamicLeaf>) return body.ones();
            else if constexpr (std::is_same_v<T, Static>) return body.leaf.ones();
            else return body.sums.total(SumField::Ones);
        },
        node.body);
}

unsigned node_level(const Tree::Node& node) {
    if (const auto* in = std::get_if<Internal>(&node.body)) return in->level;
    if (const auto* st = std::get_if<Static>(&node.body)) return st->level;
    return 0;
}

// Replaces children [first, first + count) of `parent` with `fresh`.
void replace_children(Internal& parent, std::size_t first, std::size_t count, std::vector<NodePtr> fresh, bool bit_mode) {
    for (std::size_t i = 0; i < count; ++i) {
        parent.sums.erase(first);
        parent.children.erase(parent.children.begin() + static_cast<std::ptrdiff_t>(first));
    }
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        parent.sums.insert(first + i, node_size(*fresh[i]), node_ones(*fresh[i], bit_mode));
        parent.children.insert(parent.children.begin() + static_cast<std::ptrdiff_t>(first + i), std::move(fresh[i]));
    }
}

}  // namespace

uint64_t Geometry::level_cap(unsigned level) const {
    uint64_t cap = leaf_cap;
    for (unsigned i = 0; i < level; ++i) {
        if (cap > UINT64_MAX / arity) return UINT64_MAX;
        cap *= arity;
    }
    return cap;
}

Tree::Tree(unsigned width, Geometry geometry, UnitKind kind)
    : width_(width), bit_mode_(width == 1 && kind == UnitKind::Bits), geometry_(geometry), root_(make_dynamic(PackedUnits(width))) {}

Tree::Tree(PackedUnits payload, Geometry geometry, UnitKind kind)
    : width_(payload.width()), bit_mode_(payload.width() == 1 && kind == UnitKind::Bits), geometry_(geometry) {
    root_ = bulk_load(payload);
    size_ = payload.size();
}

Tree::Tree(Tree&&) noexcept = default;
Tree& Tree::operator=(Tree&&) noexcept = default;
Tree::~Tree() = default;

uint64_t Tree::ones() const { return node_ones(*root_, bit_mode()); }

// ---------------------------------------------------------------------------
// Node construction

NodePtr Tree::make_dynamic(PackedUnits units) const {
    auto node = std::make_unique<Node>();
    node->body = DynamicLeaf(std::move(units));
    return node;
}

NodePtr Tree::make_static(PackedUnits units, unsigned level) const {
    auto node = std::make_unique<Node>();
    node->body = Static{StaticLeaf(std::move(units), bit_mode()), level};
    return node;
}

NodePtr Tree::make_internal(unsigned level, std::vector<NodePtr> children) const {
    auto node = std::make_unique<Node>();
    Internal in{level, {}, PartialSums(bit_mode()), 0};
    for (std::size_t k = 0; k < children.size(); ++k) in.sums.insert(k, node_size(*children[k]), node_ones(*children[k], bit_mode()));
    in.children = std::move(children);
    node->body = std::move(in);
    return node;
}

NodePtr Tree::build_filled(const PackedUnits& payload, uint64_t from, uint64_t count, unsigned level, bool is_root) const {
    if (level == 0) return make_dynamic(payload.slice(from, count));
    uint64_t parts = three_quarter_parts(count, geometry_.level_cap(level - 1));
    if (is_root) parts = std::max<uint64_t>(parts, 2);
    std::vector<NodePtr> children;
    children.reserve(parts);
    for (uint64_t j = 0, offset = from; j < parts; ++j) {
        const uint64_t len = part_size(count, parts, j);
        children.push_back(build_filled(payload, offset, len, level - 1, false));
        offset += len;
    }
    return make_internal(level, std::move(children));
}

NodePtr Tree::bulk_load(const PackedUnits& payload) const {
    const uint64_t n = payload.size();
    if (n <= geometry_.leaf_cap) return make_dynamic(payload.slice(0, n));
    unsigned height = 1;
    while (geometry_.level_cap(height) < n) ++height;
    return build_filled(payload, 0, n, height, true);
}

// Expands a static payload of the given level into an internal node. The part
// holding `target` keeps being split down to level 1, whose leaves are filled
// to about 3/4 of capacity; every other part becomes a static leaf one level down.
NodePtr Tree::build_split(const PackedUnits& payload, uint64_t from, uint64_t count, unsigned level,
                          std::optional<uint64_t> target, bool is_root) const {
    assert(level >= 1);
    uint64_t parts;
    if (level == 1) {
        parts = three_quarter_parts(count, geometry_.leaf_cap);
        if (parts == 1) return make_dynamic(payload.slice(from, count));
    } else if (is_root) {
        parts = std::max<uint64_t>(2, three_quarter_parts(count, geometry_.level_cap(level - 1)));
    } else {
        parts = geometry_.arity;
    }
    std::vector<NodePtr> children;
    children.reserve(parts);
    for (uint64_t j = 0, offset = 0; j < parts; ++j) {
        const uint64_t len = part_size(count, parts, j);
        if (level == 1) {
            children.push_back(make_dynamic(payload.slice(from + offset, len)));
        } else if (target && *target >= offset && *target < offset + len) {
            children.push_back(build_split(payload, from + offset, len, level - 1, *target - offset, false));
        } else {
            children.push_back(make_static(payload.slice(from + offset, len), level - 1));
        }
        offset += len;
    }
    return make_internal(level, std::move(children));
}

// Splits a dynamic leaf in two halves, or an internal node in two runs of
// children with sizes as close as possible.
std::vector<NodePtr> Tree::halve(NodePtr node) const {
    std::vector<NodePtr> out;
    if (auto* leaf = std::get_if<DynamicLeaf>(&node->body)) {
        const PackedUnits units = std::move(*leaf).release();
        const uint64_t left = (units.size() + 1) / 2;
        out.push_back(make_dynamic(units.slice(0, left)));
        out.push_back(make_dynamic(units.slice(left, units.size() - left)));
        return out;
    }
    auto& in = std::get<Internal>(node->body);
    const uint64_t total = in.sums.total(SumField::Size);
    std::size_t best = 1;
    uint64_t best_gap = UINT64_MAX;
    uint64_t prefix = 0;
    for (std::size_t t = 1; t < in.children.size(); ++t) {
        prefix += in.sums.size(t - 1);
        const uint64_t rest = total - prefix;
        const uint64_t gap = prefix > rest ? prefix - rest : rest - prefix;
        if (gap < best_gap) {
            best_gap = gap;
            best = t;
        }
    }
    std::vector<NodePtr> left;
    std::vector<NodePtr> right;
    for (std::size_t t = 0; t < in.children.size(); ++t) (t < best ? left : right).push_back(std::move(in.children[t]));
    out.push_back(make_internal(in.level, std::move(left)));
    out.push_back(make_internal(in.level, std::move(right)));
    return out;
}

void Tree::collect(const Node& node, PackedUnits& out, uint64_t& at) const {
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, DynamicLeaf>) {
                out.assign(at, body.units());
                at += body.units().size();
            } else if constexpr (std::is_same_v<T, Static>) {
                out.assign(at, body.leaf.units());
                at += body.leaf.units().size();
            } else {
                for (const auto& child : body.children) collect(*child, out, at);
            }
        },
        node.body);
}

PackedUnits Tree::flatten_all() const {
    PackedUnits out(width_, size_);
    uint64_t at = 0;
    collect(*root_, out, at);
    return out;
}

void Tree::rebuild(Geometry geometry) {
    PackedUnits payload = flatten_all();
    geometry_ = geometry;
    root_ = bulk_load(payload);
}

void Tree::emit(TreeEvent::Kind kind, unsigned level, uint64_t size, const std::vector<NodePtr>* parts) {
    if (!observer_) return;
    TreeEvent event{kind, level, size, size, 0};
    if (parts != nullptr) {
        event.left = parts->empty() ? 0 : node_size(*parts->front());
        event.right = parts->size() > 1 ? node_size(*(*parts)[1]) : 0;
    }
    observer_(event);
}

// ---------------------------------------------------------------------------
// Queries

Tree::QueryAnswer Tree::query(QueryKind kind, uint64_t arg, uint64_t value) {
    const bool is_select = kind == QueryKind::Select0 || kind == QueryKind::Select1;
    const bool wants_rank = kind == QueryKind::Rank1 || kind == QueryKind::AccessRank;
    const SumField field = kind == QueryKind::Select1 ? SumField::Ones : kind == QueryKind::Select0 ? SumField::Zeros : SumField::Size;

    path_.clear();
    NodePtr* slot = &root_;
    uint64_t size = size_;
    QueryAnswer answer;
    for (;;) {
        Node& node = **slot;
        if (auto* in = std::get_if<Internal>(&node.body)) {
            ++in->queries;
            ++stats_.query_visits;
            path_.push_back({slot, size});
            uint64_t target = arg + 1;
            if (is_select) target = arg;
            else if (kind == QueryKind::Rank1) target = std::max<uint64_t>(arg, 1);
            const auto route = *in->sums.route(field, target);
            arg -= route.consumed;
            if (is_select) answer.value += in->sums.prefix(SumField::Size, route.child);
            if (wants_rank) answer.rank += in->sums.prefix(SumField::Ones, route.child);
            size = in->sums.size(route.child);
            slot = &in->children[route.child];
            continue;
        }
        auto at_leaf = [&](auto& leaf) {
            switch (kind) {
                case QueryKind::Access: answer.value = leaf.access(arg); break;
                case QueryKind::AccessRank:
                    answer.value = leaf.access(arg);
                    answer.rank += leaf.rank1(arg);
                    break;
                case QueryKind::Rank1: answer.rank += leaf.rank1(arg); break;
                case QueryKind::Select0:
                case QueryKind::Select1: answer.value += *leaf.select(kind == QueryKind::Select1, arg); break;
                case QueryKind::WriteCell: answer.value = leaf.write(arg, value); break;
            }
        };
        if (auto* leaf = std::get_if<DynamicLeaf>(&node.body)) at_leaf(*leaf);
        else at_leaf(std::get<Static>(node.body).leaf);
        break;
    }
    maybe_flatten();
    return answer;
}

void Tree::maybe_flatten() {
    for (const auto& entry : path_) {
        auto& in = std::get<Internal>((*entry.slot)->body);
        if (in.queries < entry.size || entry.size > geometry_.flatten_cap) continue;
        const unsigned level = in.level;
        PackedUnits payload(width_, entry.size);
        uint64_t at = 0;
        collect(**entry.slot, payload, at);
        *entry.slot = make_static(std::move(payload), level);
        ++stats_.flatten_count;
        stats_.flatten_units += entry.size;
        emit(TreeEvent::Kind::Flatten, level, entry.size);
        break;
    }
    path_.clear();
}

uint64_t Tree::access(uint64_t pos) {
    assert(pos < size_);
    return query(QueryKind::Access, pos).value;
}

Tree::BitAndRank Tree::access_rank(uint64_t pos) {
    assert(bit_mode() && pos < size_);
    const auto answer = query(QueryKind::AccessRank, pos);
    return {answer.value != 0, answer.rank};
}

uint64_t Tree::rank1(uint64_t pos) {
    assert(bit_mode() && pos <= size_);
    return query(QueryKind::Rank1, pos).rank;
}

std::optional<uint64_t> Tree::select(bool bit, uint64_t j) {
    assert(bit_mode());
    const uint64_t available = bit ? ones() : size_ - ones();
    if (j == 0 || j > available) return std::nullopt;
    return query(bit ? QueryKind::Select1 : QueryKind::Select0, j).value;
}

uint64_t Tree::write_cell(uint64_t pos, uint64_t value) {
    assert(!bit_mode() && pos < size_);
    return query(QueryKind::WriteCell, pos, value).value;
}

// ---------------------------------------------------------------------------
// Updates

Tree::UpdateResult Tree::insert(uint64_t pos, uint64_t value) {
    assert(pos <= size_);
    return update(UpdateKind::Insert, pos, value);
}

Tree::UpdateResult Tree::erase(uint64_t pos) {
    assert(pos < size_);
    return update(UpdateKind::Erase, pos, 0);
}

Tree::UpdateResult Tree::write(uint64_t pos, uint64_t value) {
    assert(pos < size_);
    return update(UpdateKind::Write, pos, value);
}

Tree::UpdateResult Tree::update(UpdateKind kind, uint64_t pos, uint64_t value) {
    const auto result = update_node(root_, kind, pos, value, true);
    if (kind == UpdateKind::Insert) ++size_;
    if (kind == UpdateKind::Erase) --size_;
    fix_root();
    return result;
}

Tree::UpdateResult Tree::update_node(NodePtr& slot, UpdateKind kind, uint64_t pos, uint64_t value, bool is_root) {
    if (auto* st = std::get_if<Static>(&slot->body)) {
        const unsigned level = st->level;
        const uint64_t count = st->leaf.size();
        // Index of an existing unit on the descent route.
        const uint64_t target = kind == UpdateKind::Insert ? (pos == 0 ? 0 : pos - 1) : pos;
        const PackedUnits payload = std::move(st->leaf).release();
        slot = build_split(payload, 0, count, level, target, is_root);
        ++stats_.split_count;
        stats_.split_units += count;
        emit(TreeEvent::Kind::Split, level, count);
    }
    if (auto* leaf = std::get_if<DynamicLeaf>(&slot->body)) {
        UpdateResult result{0, bit_mode() ? leaf->rank1(pos) : 0};
        switch (kind) {
            case UpdateKind::Insert:
                leaf->insert(pos, value);
                result.value = value;
                break;
            case UpdateKind::Erase: result.value = leaf->erase(pos); break;
            case UpdateKind::Write: result.value = leaf->write(pos, value); break;
        }
        return result;
    }
    auto& in = std::get<Internal>(slot->body);
    in.queries = 0;
    ++stats_.update_visits;
    const uint64_t target = kind == UpdateKind::Insert ? std::max<uint64_t>(pos, 1) : pos + 1;
    const auto route = *in.sums.route(SumField::Size, target);
    const std::size_t k = route.child;
    const uint64_t ones_before = bit_mode() ? in.sums.prefix(SumField::Ones, k) : 0;
    auto result = update_node(in.children[k], kind, pos - route.consumed, value, false);
    result.rank1 += ones_before;
    switch (kind) {
        case UpdateKind::Insert: in.sums.adjust(k, 1, static_cast<int64_t>(value)); break;
        case UpdateKind::Erase: in.sums.adjust(k, -1, -static_cast<int64_t>(result.value)); break;
        case UpdateKind::Write:
            in.sums.adjust(k, 0, static_cast<int64_t>(value) - static_cast<int64_t>(result.value));
            break;
    }
    fix_child(*slot, k);
    return result;
}

void Tree::fix_child(Node& parent, std::size_t k) {
    auto& in = std::get<Internal>(parent.body);
    const Node& child = *in.children[k];
    const uint64_t size = in.sums.size(k);
    const bool can_merge = in.children.size() > 1;
    if (std::holds_alternative<DynamicLeaf>(child.body)) {
        if (size > geometry_.leaf_cap) split_leaf(parent, k);
        else if (4 * size < geometry_.leaf_cap && can_merge) merge_leaves(parent, k);
    } else if (const auto* sub = std::get_if<Internal>(&child.body)) {
        const uint64_t cap = geometry_.level_cap(sub->level);
        if (size > cap) cut_node(parent, k);
        else if (static_cast<unsigned __int128>(size) * 4 < cap && can_merge) merge_nodes(parent, k);
    }
}

void Tree::split_leaf(Node& parent, std::size_t k) {
    auto& in = std::get<Internal>(parent.body);
    const uint64_t size = in.sums.size(k);
    auto halves = halve(std::move(in.children[k]));
    emit(TreeEvent::Kind::LeafSplit, 0, size, &halves);
    replace_children(in, k, 1, std::move(halves), bit_mode());
    ++stats_.leaf_splits;
}

// Merged leaves stay whole up to 14/16 of capacity minus one, otherwise they
// are cut again into two halves.
void Tree::merge_leaves(Node& parent, std::size_t k) {
    auto& in = std::get<Internal>(parent.body);
    const std::size_t lo = k + 1 < in.children.size() ? k : k - 1;
    PackedUnits merged = std::move(std::get<DynamicLeaf>(in.children[lo]->body)).release();
    merged.append(std::get<DynamicLeaf>(in.children[lo + 1]->body).units());
    const uint64_t size = merged.size();
    std::vector<NodePtr> fresh;
    fresh.push_back(make_dynamic(std::move(merged)));
    if (16 * (size + 1) > 14 * geometry_.leaf_cap) fresh = halve(std::move(fresh.front()));
    emit(TreeEvent::Kind::LeafMerge, 0, size, &fresh);
    replace_children(in, lo, 2, std::move(fresh), bit_mode());
    ++stats_.leaf_merges;
}

void Tree::cut_node(Node& parent, std::size_t k) {
    auto& in = std::get<Internal>(parent.body);
    const uint64_t size = in.sums.size(k);
    const unsigned level = node_level(*in.children[k]);
    auto halves = halve(std::move(in.children[k]));
    emit(TreeEvent::Kind::NodeCut, level, size, &halves);
    replace_children(in, k, 1, std::move(halves), bit_mode());
    ++stats_.node_cuts;
}

void Tree::merge_nodes(Node& parent, std::size_t k) {
    auto& in = std::get<Internal>(parent.body);
    const std::size_t lo = k + 1 < in.children.size() ? k : k - 1;
    const unsigned level = node_level(*in.children[k]);
    std::vector<NodePtr> children;
    for (std::size_t t = lo; t <= lo + 1; ++t) {
        NodePtr& sibling = in.children[t];
        if (auto* st = std::get_if<Static>(&sibling->body)) {
            // A static partner is first expanded one level.
            const uint64_t count = st->leaf.size();
            const PackedUnits payload = std::move(st->leaf).release();
            sibling = build_split(payload, 0, count, st->level, std::nullopt, false);
            ++stats_.split_count;
            stats_.split_units += count;
            emit(TreeEvent::Kind::Split, level, count);
        }
        auto& sub = std::get<Internal>(sibling->body);
        for (auto& child : sub.children) children.push_back(std::move(child));
    }
    std::vector<NodePtr> fresh;
    fresh.push_back(make_internal(level, std::move(children)));
    const uint64_t size = node_size(*fresh.front());
    if (static_cast<unsigned __int128>(size + 1) * 16 > static_cast<unsigned __int128>(geometry_.level_cap(level)) * 14) {
        fresh = halve(std::move(fresh.front()));
    }
    emit(TreeEvent::Kind::NodeMerge, level, size, &fresh);
    replace_children(in, lo, 2, std::move(fresh), bit_mode());
    ++stats_.node_merges;
}

void Tree::fix_root() {
    while (auto* in = std::get_if<Internal>(&root_->body)) {
        if (in->children.size() != 1) break;
        NodePtr only = std::move(in->children.front());
        root_ = std::move(only);
    }
    if (const auto* leaf = std::get_if<DynamicLeaf>(&root_->body)) {
        if (leaf->size() > geometry_.leaf_cap) {
            auto halves = halve(std::move(root_));
            emit(TreeEvent::Kind::LeafSplit, 0, size_, &halves);
            root_ = make_internal(1, std::move(halves));
            ++stats_.leaf_splits;
        }
    } else if (const auto* in = std::get_if<Internal>(&root_->body)) {
        const unsigned level = in->level;
        if (size_ > geometry_.level_cap(level)) {
            auto halves = halve(std::move(root_));
            emit(TreeEvent::Kind::NodeCut, level, size_, &halves);
            root_ = make_internal(level + 1, std::move(halves));
            ++stats_.node_cuts;
        }
    }
}

// ---------------------------------------------------------------------------
// Validation, accounting, inspection

Tree::Checked Tree::check(const Node& node, const std::string& where, bool is_root, std::vector<std::string>& out) const {
    const uint64_t cap = geometry_.leaf_cap;
    auto storage_exact = [&](const PackedUnits& units) {
        if (units.storage_words() != broadword::words_for(units.bit_size()) || units.words().size() != units.storage_words()) {
            out.push_back(where + ": leaf storage is not exactly ceil(bits/64) words");
        }
    };
    if (const auto* leaf = std::get_if<DynamicLeaf>(&node.body)) {
        const uint64_t size = leaf->size();
        storage_exact(leaf->units());
        if (size > cap) out.push_back(where + ": dynamic leaf of " + std::to_string(size) + " units exceeds capacity");
        if (!is_root && 4 * size < cap) out.push_back(where + ": dynamic leaf of " + std::to_string(size) + " units underflows");
        return {size, node_ones(node, bit_mode())};
    }
    if (const auto* st = std::get_if<Static>(&node.body)) {
        const uint64_t size = st->leaf.size();
        storage_exact(st->leaf.units());
        if (st->level == 0) out.push_back(where + ": static leaf at level 0");
        if (size == 0) out.push_back(where + ": empty static leaf");
        if (!st->leaf.consistent()) out.push_back(where + ": static leaf index disagrees with its payload");
        if (st->leaf.indexed() != bit_mode()) out.push_back(where + ": static leaf index mode mismatch");
        const uint64_t level_cap = geometry_.level_cap(st->level);
        if (size > level_cap || (!is_root && static_cast<unsigned __int128>(size) * 4 < level_cap)) {
            out.push_back(where + ": static leaf size " + std::to_string(size) + " outside level-" + std::to_string(st->level) + " bounds");
        }
        return {size, st->leaf.indexed() ? st->leaf.ones() : 0};
    }
    const auto& in = std::get<Internal>(node.body);
    const std::size_t arity = in.children.size();
    const unsigned a = geometry_.arity;
    if (in.level == 0) out.push_back(where + ": internal node at level 0");
    if (arity > 4 * a || (is_root && arity < 2) || (!is_root && 4 * arity < a)) {
        out.push_back(where + ": arity " + std::to_string(arity) + " out of bounds");
    }
    if (in.sums.count() != arity) {
        out.push_back(where + ": partial sums hold " + std::to_string(in.sums.count()) + " entries for " + std::to_string(arity) + " children");
        return {0, 0};
    }
    Checked total{0, 0};
    for (std::size_t k = 0; k < arity; ++k) {
        const Node& child = *in.children[k];
        const std::string child_where = where + "/" + std::to_string(k);
        const bool dynamic = std::holds_alternative<DynamicLeaf>(child.body);
        if (dynamic != (in.level == 1) || (!dynamic && node_level(child) + 1 != in.level)) {
            out.push_back(child_where + ": child level does not fit parent level " + std::to_string(in.level));
        }
        const Checked sub = check(child, child_where, false, out);
        if (in.sums.size(k) != sub.size) {
            out.push_back(where + ": size entry " + std::to_string(k) + " is " + std::to_string(in.sums.size(k)) + ", subtree holds " + std::to_string(sub.size));
        }
        if (bit_mode() && in.sums.ones(k) != sub.ones) {
            out.push_back(where + ": ones entry " + std::to_string(k) + " is " + std::to_string(in.sums.ones(k)) + ", subtree holds " + std::to_string(sub.ones));
        }
        total.size += sub.size;
        total.ones += sub.ones;
    }
    const uint64_t level_cap = geometry_.level_cap(in.level);
    if (total.size > level_cap || (!is_root && static_cast<unsigned __int128>(total.size) * 4 < level_cap)) {
        out.push_back(where + ": weight " + std::to_string(total.size) + " outside level-" + std::to_string(in.level) + " bounds");
    }
    return total;
}

std::vector<std::string> Tree::validate() const {
    std::vector<std::string> out;
    const Checked total = check(*root_, "root", true, out);
    if (total.size != size_) out.push_back("root: holds " + std::to_string(total.size) + " units, tree reports " + std::to_string(size_));
    return out;
}

void Tree::account(const Node& node, SpaceBreakdown& out) const {
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, DynamicLeaf>) {
                out.payload_bits += body.units().bit_size();
                out.dynamic_leaf_slack_bits += 64 * body.units().storage_words() - body.units().bit_size();
            } else if constexpr (std::is_same_v<T, Static>) {
                out.payload_bits += body.leaf.units().bit_size();
                out.static_index_bits += body.leaf.index_bits() + 64 * body.leaf.units().storage_words() - body.leaf.units().bit_size();
            } else {
                // Per child: pointer, size, and (bits only) ones; plus the query counter and level.
                const uint64_t fields = bit_mode() ? 3 : 2;
                out.internal_node_bits += geometry_.entry_bits * (fields * body.children.size() + 2);
                for (const auto& child : body.children) account(*child, out);
            }
        },
        node.body);
}

SpaceBreakdown Tree::space() const {
    SpaceBreakdown out;
    account(*root_, out);
    return out;
}

NodeInfo Tree::info(const Node& node) const {
    NodeInfo result{NodeKind::Dynamic, node_level(node), node_size(node), node_ones(node, bit_mode()), 0, 0};
    if (const auto* in = std::get_if<Internal>(&node.body)) {
        result.kind = NodeKind::Internal;
        result.queries = in->queries;
        result.arity = in->children.size();
    } else if (std::holds_alternative<Static>(node.body)) {
        result.kind = NodeKind::Static;
    }
    return result;
}

NodeInfo Tree::root_info() const { return info(*root_); }

const Tree::Node& Tree::node_at(std::span<const std::size_t> path) const {
    const Node* node = root_.get();
    for (const std::size_t k : path) {
        const auto* in = std::get_if<Internal>(&node->body);
        if (in == nullptr || k >= in->children.size()) throw std::out_of_range("node path leaves the tree");
        node = in->children[k].get();
    }
    return *node;
}

std::vector<NodeInfo> Tree::children_info(std::span<const std::size_t> path) const {
    std::vector<NodeInfo> out;
    if (const auto* in = std::get_if<Internal>(&node_at(path).body)) {
        for (const auto& child : in->children) out.push_back(info(*child));
    }
    return out;
}

std::vector<NodeInfo> Tree::path_info(uint64_t pos) const {
    std::vector<NodeInfo> out;
    const Node* node = root_.get();
    while (const auto* in = std::get_if<Internal>(&node->body)) {
        out.push_back(info(*node));
        const auto route = *in->sums.route(SumField::Size, pos + 1);
        pos -= route.consumed;
        node = in->children[route.child].get();
    }
    return out;
}

void Tree::corrupt_sum_for_testing(std::span<const std::size_t> path, std::size_t k, uint64_t size) {
    auto& in = std::get<Internal>(const_cast<Node&>(node_at(path)).body);
    in.sums.assign(k, size, in.sums.ones(k));
}

}  // namespace adb
