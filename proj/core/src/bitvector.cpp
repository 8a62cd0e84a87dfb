#include "adb/bitvector.hpp"

#include <stdexcept>

namespace adb {

namespace {

void require_range(const char* op, uint64_t i, uint64_t lo, uint64_t hi) {
    if (i < lo || i > hi) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }
}

}  // namespace

Geometry bit_geometry(const Params& params) { return Geometry{params.a, params.b, params.flatten_cap, params.log_n}; }

SpaceReport make_space_report(const SpaceBreakdown& breakdown) {
    SpaceReport report;
    report.payload_bits = breakdown.payload_bits;
    report.dynamic_leaf_slack_bits = breakdown.dynamic_leaf_slack_bits;
    report.static_index_bits = breakdown.static_index_bits;
    report.internal_node_bits = breakdown.internal_node_bits;
    report.total_bits = report.payload_bits + report.dynamic_leaf_slack_bits + report.static_index_bits + report.internal_node_bits;
    if (report.payload_bits > 0) {
        report.overhead_ratio = static_cast<double>(report.total_bits - report.payload_bits) / static_cast<double>(report.payload_bits);
    }
    return report;
}

AdaptiveBitvector::AdaptiveBitvector() : params_(compute_params(kMinLogN)), tree_(1, bit_geometry(params_)) {}

AdaptiveBitvector::AdaptiveBitvector(PackedUnits bits, Params params) : params_(params), tree_(std::move(bits), bit_geometry(params)) {}

AdaptiveBitvector AdaptiveBitvector::from_bits(PackedUnits bits) {
    if (bits.width() != 1) throw std::invalid_argument("from_bits: payload must have unit width 1");
    const Params params = compute_params(ceil_log2_clamped(bits.size()));
    return AdaptiveBitvector(std::move(bits), params);
}

bool AdaptiveBitvector::access(uint64_t i) {
    require_range("access", i, 1, size());
    ++queries_;
    return tree_.access(i - 1) != 0;
}

uint64_t AdaptiveBitvector::rank(bool bit, uint64_t i) {
    require_range("rank", i, 0, size());
    ++queries_;
    const uint64_t ones = tree_.rank1(i);
    return bit ? ones : i - ones;
}

std::optional<uint64_t> AdaptiveBitvector::select(bool bit, uint64_t j) {
    if (j == 0) throw std::out_of_range("select: occurrence number must be at least 1");
    ++queries_;
    const auto pos = tree_.select(bit, j);
    if (!pos) return std::nullopt;
    return *pos + 1;
}

std::pair<bool, uint64_t> AdaptiveBitvector::access_rank(uint64_t i) {
    require_range("access", i, 1, size());
    ++queries_;
    const auto answer = tree_.access_rank(i - 1);
    return {answer.bit, answer.rank1};
}

uint64_t AdaptiveBitvector::insert_rank(uint64_t i, bool bit) {
    require_range("insert", i, 1, size() + 1);
    const auto result = tree_.insert(i - 1, bit ? 1 : 0);
    after_update();
    return result.rank1;
}

std::pair<bool, uint64_t> AdaptiveBitvector::erase_rank(uint64_t i) {
    if (size() == 0) throw std::out_of_range("delete: bitvector is empty");
    require_range("delete", i, 1, size());
    const auto result = tree_.erase(i - 1);
    after_update();
    return {result.value != 0, result.rank1};
}

bool AdaptiveBitvector::write(uint64_t i, bool bit) {
    require_range("write", i, 1, size());
    const auto result = tree_.write(i - 1, bit ? 1 : 0);
    after_update();
    return result.value != 0;
}

void AdaptiveBitvector::after_update() {
    ++updates_;
    const unsigned current = ceil_log2_clamped(size());
    if (rebuild_due(current, params_.log_n)) {
        params_ = compute_params(current);
        tree_.rebuild(bit_geometry(params_));
        ++rebuilds_;
    }
}

LifetimeStats AdaptiveBitvector::stats() const {
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

SpaceReport AdaptiveBitvector::space_report() const { return make_space_report(tree_.space()); }

std::vector<std::string> AdaptiveBitvector::check() const {
    std::vector<std::string> out = tree_.validate();
    if (tree_.geometry().arity != params_.a || tree_.geometry().leaf_cap != params_.b) out.push_back("facade: tree geometry differs from params");
    const unsigned current = ceil_log2_clamped(size());
    if (rebuild_due(current, params_.log_n)) {
        out.push_back("facade: log_n " + std::to_string(params_.log_n) + " is stale for " + std::to_string(size()) + " bits");
    }
    return out;
}

}  // namespace adb
