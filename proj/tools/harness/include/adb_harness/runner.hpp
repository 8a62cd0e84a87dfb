#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "adb_harness/trace.hpp"

namespace adb::harness {

/// Counters over one window of operations. Unit totals for sequences are
/// summed over all levels.
struct StatsRow {
    uint64_t window = 0;
    uint64_t ops = 0;
    uint64_t m = 0;  ///< queries in the window
    uint64_t u = 0;  ///< updates in the window
    double q = 0.0;  ///< m / max(u, 1)
    double visits_per_query = 0.0;
    double visits_per_update = 0.0;
    uint64_t flatten_count = 0;
    uint64_t split_count = 0;
    double overhead_ratio = 0.0;  ///< at the end of the window
    uint64_t elapsed_ns = 0;      ///< time spent in the adaptive structure only
};

struct RunOptions {
    uint64_t window = 1000;
    /// Compare every query answer and every delete/write return with the oracle.
    bool verify = false;
    /// Called after every row; the default run keeps rows only.
    std::function<void(const StatsRow&)> on_row;
    /// Called after every operation with its 0-based index; used by tests to
    /// check structures between operations.
    std::function<void(uint64_t)> after_op;
};

struct RunResult {
    enum class Status { Ok, Mismatch, Invalid };
    Status status = Status::Ok;
    std::string diagnostic;  ///< set unless Ok
    std::vector<StatsRow> rows;
};

RunResult run(const Trace& trace, const RunOptions& options);

inline constexpr std::string_view kStatsMagic = "# adb-stats v1";
inline constexpr std::string_view kCsvColumns =
    "window,ops,m,u,q,visits_per_query,visits_per_update,flatten_count,split_count,overhead_ratio,elapsed_ns";

/// Without `with_elapsed` the timing column is dropped, leaving only
/// deterministic counters.
void write_csv_header(std::ostream& out, bool with_elapsed = true);
void write_csv_row(std::ostream& out, const StatsRow& row, bool with_elapsed = true);

}  // namespace adb::harness
