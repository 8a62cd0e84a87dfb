#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "adb_harness/runner.hpp"
#include "adb_harness/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr const char* kCsvHelp = R"(CSV output of `run` (one row per window, after two header lines):
  # adb-stats v1          schema version
  window                  0-based window index
  ops                     operations in the window
  m, u                    queries and updates in the window
  q                       m / max(u, 1)
  visits_per_query        mean internal nodes visited per query
  visits_per_update       mean internal nodes visited per update
  flatten_count           subtrees made static in the window
  split_count             static leaves split in the window
  overhead_ratio          (total bits - payload bits) / payload bits at window end
  elapsed_ns              time inside the adaptive structure (omitted with --no-timing)
Sequences sum visits, flattens and splits over all wavelet-matrix levels.
Exit codes: 0 ok, 1 verification mismatch, 2 usage, parse or invalid operation.)";

struct WorkloadFlags {
    std::string kind = "bits";
    uint64_t n0 = 0;
    uint64_t ops = 1000;
    double q = 1.0;
    uint64_t seed = 1;
};

void add_workload_flags(CLI::App& app, WorkloadFlags& flags) {
    app.add_option("--kind", flags.kind, "bits, array:<width 1..64> or seq:<sigma >= 2>");
    app.add_option("--n0", flags.n0, "initial size, filled from the seed");
    app.add_option("--ops", flags.ops, "number of operations");
    app.add_option("--q", flags.q, "query:update ratio; each op is an update with probability 1/q");
    app.add_option("--seed", flags.seed, "seed for payload, operation mix and uniform arguments");
}

adb::harness::GenerateOptions to_options(const WorkloadFlags& flags, bool literal) {
    adb::harness::GenerateOptions options;
    options.kind = adb::harness::parse_kind(flags.kind);
    options.n0 = flags.n0;
    options.ops = flags.ops;
    options.q = flags.q;
    options.seed = flags.seed;
    options.literal = literal;
    return options;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workload harness for the adaptive bitvector, arrays and wavelet matrix"};
    app.require_subcommand(1);
    app.footer(kCsvHelp);

    WorkloadFlags gen_flags;
    bool literal = false;
    auto* generate = app.add_subcommand("generate", "write a trace to standard output");
    add_workload_flags(*generate, gen_flags);
    generate->add_flag("--literal", literal, "resolve every argument and annotate each answer using the oracle");

    WorkloadFlags run_flags;
    std::string trace_path;
    uint64_t window = 1000;
    bool verify = false;
    bool no_timing = false;
    auto* run = app.add_subcommand("run", "replay a trace and write CSV statistics to standard output");
    run->add_option("--trace", trace_path, "trace file; standard input when absent");
    add_workload_flags(*run, run_flags);
    run->add_option("--window", window, "operations per CSV row")->check(CLI::PositiveNumber);
    run->add_flag("--verify", verify, "compare every answer with the naive oracle");
    run->add_flag("--no-timing", no_timing, "drop the elapsed_ns column");
    run->footer(kCsvHelp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            adb::harness::write_trace(std::cout, adb::harness::generate(to_options(gen_flags, literal)));
            return kExitOk;
        }

        const bool inline_workload = run->count("--kind") + run->count("--n0") + run->count("--ops") + run->count("--q") + run->count("--seed") > 0;
        if (inline_workload && run->count("--trace") > 0) {
            std::cerr << "adb run: --trace cannot be combined with --kind/--n0/--ops/--q/--seed\n";
            return kExitUsage;
        }
        adb::harness::Trace trace;
        if (inline_workload) {
            trace = adb::harness::generate(to_options(run_flags, false));
        } else if (!trace_path.empty()) {
            std::ifstream in(trace_path);
            if (!in) {
                std::cerr << "adb run: cannot open " << trace_path << '\n';
                return kExitUsage;
            }
            trace = adb::harness::parse_trace(in);
        } else {
            trace = adb::harness::parse_trace(std::cin);
        }

        adb::harness::RunOptions options;
        options.window = window;
        options.verify = verify;
        const bool with_elapsed = !no_timing;
        options.on_row = [&](const adb::harness::StatsRow& row) { adb::harness::write_csv_row(std::cout, row, with_elapsed); };
        adb::harness::write_csv_header(std::cout, with_elapsed);
        const auto result = adb::harness::run(trace, options);
        std::cout.flush();
        switch (result.status) {
            case adb::harness::RunResult::Status::Ok: return kExitOk;
            case adb::harness::RunResult::Status::Mismatch:
                std::cerr << "adb run: mismatch at " << result.diagnostic << '\n';
                return kExitMismatch;
            case adb::harness::RunResult::Status::Invalid:
                std::cerr << "adb run: invalid operation at " << result.diagnostic << '\n';
                return kExitUsage;
        }
    } catch (const adb::harness::ParseError& e) {
        std::cerr << "adb: parse error at " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "adb: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
