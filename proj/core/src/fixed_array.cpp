#include "adb/fixed_array.hpp"

#include <algorithm>
#include <stdexcept>

#include "adb/bitvector.hpp"

namespace adb {

namespace {

void require_range(const char* op, uint64_t i, uint64_t lo, uint64_t hi) {
    if (i < lo || i > hi) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }
}

unsigned checked_width(unsigned width) {
    if (width < 1 || width > 64) throw std::invalid_argument("cell width must be in [1, 64]");
    return width;
}

PackedUnits pack(unsigned width, const std::vector<uint64_t>& values) {
    PackedUnits cells(width, values.size());
    for (uint64_t i = 0; i < values.size(); ++i) cells.set(i, values[i]);
    return cells;
}

}  // namespace

Geometry array_geometry(const Params& params, unsigned width) {
    const uint64_t leaf_bits = 64 * params.b / params.log_n;
    return Geometry{params.a, std::max<uint64_t>(4, leaf_bits / checked_width(width)), params.flatten_cap, params.log_n};
}

AdaptiveArray::AdaptiveArray(unsigned width)
    : params_(compute_params(kMinLogN)), tree_(checked_width(width), array_geometry(params_, width), UnitKind::Cells) {}

AdaptiveArray::AdaptiveArray(unsigned width, PackedUnits cells, Params params)
    : params_(params), tree_(std::move(cells), array_geometry(params, width), UnitKind::Cells) {}

AdaptiveArray AdaptiveArray::from_values(unsigned width, const std::vector<uint64_t>& values) {
    AdaptiveArray probe(checked_width(width));
    for (const uint64_t v : values) probe.check_value(v);
    const Params params = compute_params(ceil_log2_clamped(values.size()));
    return AdaptiveArray(width, pack(width, values), params);
}

void AdaptiveArray::check_value(uint64_t value) const {
    if (width() < 64 && (value >> width()) != 0) {
        throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " + std::to_string(width()) + " bits");
    }
}

uint64_t AdaptiveArray::read(uint64_t i) {
    require_range("read", i, 1, size());
    ++queries_;
    return tree_.access(i - 1);
}

uint64_t AdaptiveArray::write(uint64_t i, uint64_t value) {
    require_range("write", i, 1, size());
    check_value(value);
    ++queries_;
    return tree_.write_cell(i - 1, value);
}

void AdaptiveArray::insert(uint64_t i, uint64_t value) {
    require_range("insert", i, 1, size() + 1);
    check_value(value);
    tree_.insert(i - 1, value);
    after_update();
}

uint64_t AdaptiveArray::erase(uint64_t i) {
    if (size() == 0) throw std::out_of_range("delete: array is empty");
    require_range("delete", i, 1, size());
    const uint64_t value = tree_.erase(i - 1).value;
    after_update();
    return value;
}

void AdaptiveArray::after_update() {
    ++updates_;
    const unsigned current = ceil_log2_clamped(size());
    if (rebuild_due(current, params_.log_n)) {
        params_ = compute_params(current);
        tree_.rebuild(array_geometry(params_, width()));
        ++rebuilds_;
    }
}

LifetimeStats AdaptiveArray::stats() const {
    const TreeStats& t = tree_.stats();
    LifetimeStats s;
    s.queries_total = queries_;
    s.updates_total = updates_;
    s.query_visits = t.query_visits;
    s.update_visits = t.update_visits;
    s.internal_visits = t.query_visits + t.update_visits;
    s.flatten_count = t.flatten_count;
    s.flatten_bits = t.flatten_units;
    s.split_count = t.split_count;
    s.split_bits = t.split_units;
    s.rebuild_count = rebuilds_;
    return s;
}

SpaceReport AdaptiveArray::space_report() const { return make_space_report(tree_.space()); }

std::vector<std::string> AdaptiveArray::check() const {
    std::vector<std::string> out = tree_.validate();
    if (rebuild_due(ceil_log2_clamped(size()), params_.log_n)) out.push_back("facade: log_n is stale");
    return out;
}

std::vector<uint64_t> AdaptiveArray::values() const {
    const PackedUnits cells = tree_.flatten_all();
    std::vector<uint64_t> out(cells.size());
    for (uint64_t i = 0; i < cells.size(); ++i) out[i] = cells.get(i);
    return out;
}

}  // namespace adb
