#pragma once

#include <cstdint>

namespace adb {

/// Monotone lifetime counters. Unit counts are bits for bitvectors and cells
/// for arrays.
struct LifetimeStats {
    uint64_t queries_total = 0;  ///< m
    uint64_t updates_total = 0;  ///< u; the query/update ratio q is m/u
    uint64_t internal_visits = 0;
    uint64_t query_visits = 0;
    uint64_t update_visits = 0;
    uint64_t flatten_count = 0;
    uint64_t flatten_bits = 0;
    uint64_t split_count = 0;
    uint64_t split_bits = 0;
    uint64_t rebuild_count = 0;
};

/// Logical space measured by a structural walk (not process memory).
struct SpaceReport {
    uint64_t payload_bits = 0;
    uint64_t dynamic_leaf_slack_bits = 0;
    uint64_t static_index_bits = 0;
    uint64_t internal_node_bits = 0;
    uint64_t total_bits = 0;
    double overhead_ratio = 0.0;  ///< (total - payload) / payload, 0 when empty
};

}  // namespace adb
