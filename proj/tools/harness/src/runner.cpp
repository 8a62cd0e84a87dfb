#include "adb_harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "subjects.hpp"

namespace adb::harness {

namespace {

std::string describe(const detail::Outcome& outcome) {
    if (!outcome.present) return "nothing";
    return outcome.value ? std::to_string(*outcome.value) : std::string("none");
}

std::string where(const Op& op, uint64_t index) {
    std::string out = op.line > 0 ? "line " + std::to_string(op.line) + " (op " + std::to_string(index + 1) + ")" : "op " + std::to_string(index + 1);
    return out + " '" + format_op(op) + "'";
}

std::string resolved_text(const detail::Resolved& r) {
    std::string out(1, static_cast<char>(r.code));
    out += " " + std::to_string(r.first);
    if (arity(r.code) == 2) out += " " + std::to_string(r.second);
    return out;
}

class Window {
  public:
    explicit Window(uint64_t index) : index_(index) {}

    void record(bool update, uint64_t elapsed_ns) {
        ++ops_;
        (update ? u_ : m_) += 1;
        elapsed_ns_ += elapsed_ns;
    }
    uint64_t ops() const { return ops_; }

    StatsRow close(const detail::Totals& start, const detail::Totals& end, double overhead) const {
        StatsRow row;
        row.window = index_;
        row.ops = ops_;
        row.m = m_;
        row.u = u_;
        row.q = static_cast<double>(m_) / static_cast<double>(std::max<uint64_t>(u_, 1));
        row.visits_per_query = m_ == 0 ? 0.0 : static_cast<double>(end.query_visits - start.query_visits) / static_cast<double>(m_);
        row.visits_per_update = u_ == 0 ? 0.0 : static_cast<double>(end.update_visits - start.update_visits) / static_cast<double>(u_);
        row.flatten_count = end.flatten_count - start.flatten_count;
        row.split_count = end.split_count - start.split_count;
        row.overhead_ratio = overhead;
        row.elapsed_ns = elapsed_ns_;
        return row;
    }

  private:
    uint64_t index_;
    uint64_t ops_ = 0;
    uint64_t m_ = 0;
    uint64_t u_ = 0;
    uint64_t elapsed_ns_ = 0;
};

template <class Subject, class Oracle>
RunResult run_with(const Trace& trace, const RunOptions& options, Subject subject, std::optional<Oracle> oracle) {
    using Clock = std::chrono::steady_clock;
    RunResult result;
    const TraceKind& kind = trace.header.kind;
    const uint64_t window_size = std::max<uint64_t>(options.window, 1);
    detail::Rng resolver(trace.header.seed ^ detail::kResolveSalt);
    detail::Totals window_start = subject.totals();
    Window window(0);

    auto close_window = [&] {
        const detail::Totals now = subject.totals();
        StatsRow row = window.close(window_start, now, subject.overhead());
        if (options.on_row) options.on_row(row);
        result.rows.push_back(row);
        window_start = now;
        window = Window(row.window + 1);
    };

    for (uint64_t index = 0; index < trace.ops.size(); ++index) {
        const Op& op = trace.ops[index];
        detail::Resolved r;
        detail::Outcome got;
        try {
            r = detail::resolve(kind, op, subject, resolver);
            const auto t0 = Clock::now();
            got = subject.exec(r);
            const auto t1 = Clock::now();
            window.record(is_update(kind, op.code), static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
        } catch (const std::exception& e) {
            result.status = RunResult::Status::Invalid;
            result.diagnostic = where(op, index) + ": " + e.what();
            return result;
        }
        if (oracle) {
            const detail::Outcome want = oracle->exec(r);
            if (want != got) {
                result.status = RunResult::Status::Mismatch;
                result.diagnostic = where(op, index) + " as '" + resolved_text(r) + "': expected " + describe(want) + ", got " + describe(got);
                return result;
            }
        }
        if (op.expected && (!got.present || got.value != op.expected->value)) {
            result.status = RunResult::Status::Mismatch;
            result.diagnostic = where(op, index) + ": annotated answer " +
                                (op.expected->value ? std::to_string(*op.expected->value) : std::string("none")) + ", got " + describe(got);
            return result;
        }
        if (options.after_op) options.after_op(index);
        if (window.ops() == window_size) close_window();
    }
    if (window.ops() > 0) close_window();
    return result;
}

}  // namespace

RunResult run(const Trace& trace, const RunOptions& options) {
    const auto payload = detail::initial_payload(trace.header);
    const TraceKind& kind = trace.header.kind;
    switch (kind.family) {
        case TraceKind::Family::Bits: {
            std::optional<detail::BitsOracle> oracle;
            if (options.verify) oracle.emplace(payload);
            return run_with(trace, options, detail::BitsSubject(payload), std::move(oracle));
        }
        case TraceKind::Family::Array: {
            const auto width = static_cast<unsigned>(kind.param);
            std::optional<detail::ArrayOracle> oracle;
            if (options.verify) oracle.emplace(width, payload);
            return run_with(trace, options, detail::ArraySubject(width, payload), std::move(oracle));
        }
        case TraceKind::Family::Seq: {
            std::optional<detail::SeqOracle> oracle;
            if (options.verify) oracle.emplace(kind.param, payload);
            return run_with(trace, options, detail::SeqSubject(kind.param, payload), std::move(oracle));
        }
    }
    return {};
}

void write_csv_header(std::ostream& out, bool with_elapsed) {
    std::string_view columns = kCsvColumns;
    if (!with_elapsed) columns = columns.substr(0, columns.rfind(','));
    out << kStatsMagic << '\n' << columns << '\n';
}

void write_csv_row(std::ostream& out, const StatsRow& row, bool with_elapsed) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, "%llu,%llu,%llu,%llu,%.6f,%.6f,%.6f,%llu,%llu,%.6f",
                  static_cast<unsigned long long>(row.window), static_cast<unsigned long long>(row.ops),
                  static_cast<unsigned long long>(row.m), static_cast<unsigned long long>(row.u), row.q, row.visits_per_query,
                  row.visits_per_update, static_cast<unsigned long long>(row.flatten_count),
                  static_cast<unsigned long long>(row.split_count), row.overhead_ratio);
    out << buffer;
    if (with_elapsed) out << ',' << row.elapsed_ns;
    out << '\n';
}

}  // namespace adb::harness
