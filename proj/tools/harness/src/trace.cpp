#include "adb_harness/trace.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "subjects.hpp"

namespace adb::harness {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<uint64_t> parse_number(std::string_view text) {
    uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
    return value;
}

Arg parse_arg(std::string_view token, std::size_t line) {
    if (token == "U") return Arg{};
    const auto value = parse_number(token);
    if (!value) throw ParseError(line, "argument '" + std::string(token) + "' is neither a number nor U");
    return Arg::literal(*value);
}

std::string format_arg(const Arg& arg) { return arg.uniform ? "U" : std::to_string(arg.value); }

TraceHeader parse_header(const std::vector<std::string_view>& words, std::size_t line) {
    TraceHeader header;
    bool has_kind = false;
    bool has_n0 = false;
    bool has_seed = false;
    for (const auto word : words) {
        const auto eq = word.find('=');
        if (eq == std::string_view::npos) throw ParseError(line, "header field '" + std::string(word) + "' is not key=value");
        const auto key = word.substr(0, eq);
        const auto value = word.substr(eq + 1);
        if (key == "kind") {
            try {
                header.kind = parse_kind(value);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line, e.what());
            }
            has_kind = true;
        } else if (key == "n0" || key == "seed") {
            const auto number = parse_number(value);
            if (!number) throw ParseError(line, "header field " + std::string(key) + " needs a number");
            (key == "n0" ? header.n0 : header.seed) = *number;
            (key == "n0" ? has_n0 : has_seed) = true;
        } else {
            throw ParseError(line, "unknown header field '" + std::string(key) + "'");
        }
    }
    if (!has_kind || !has_n0 || !has_seed) throw ParseError(line, "header needs kind=, n0= and seed=");
    return header;
}

bool allowed(const TraceKind& kind, OpCode code) {
    switch (kind.family) {
        case TraceKind::Family::Bits: return true;
        case TraceKind::Family::Array: return code != OpCode::Rank && code != OpCode::Select;
        case TraceKind::Family::Seq: return code != OpCode::Write;
    }
    return false;
}

}  // namespace

std::string to_string(const TraceKind& kind) {
    switch (kind.family) {
        case TraceKind::Family::Bits: return "bits";
        case TraceKind::Family::Array: return "array:" + std::to_string(kind.param);
        case TraceKind::Family::Seq: return "seq:" + std::to_string(kind.param);
    }
    return "?";
}

TraceKind parse_kind(std::string_view text) {
    if (text == "bits") return {TraceKind::Family::Bits, 1};
    const auto colon = text.find(':');
    const auto family = text.substr(0, colon);
    // 0 marks a missing or malformed parameter; both families reject it.
    const uint64_t param = colon == std::string_view::npos ? 0 : parse_number(text.substr(colon + 1)).value_or(0);
    if (family == "array" && param >= 1 && param <= 64) return {TraceKind::Family::Array, param};
    if (family == "seq" && param >= 2) return {TraceKind::Family::Seq, param};
    throw std::invalid_argument("kind must be bits, array:<1..64> or seq:<sigma >= 2>, got '" + std::string(text) + "'");
}

bool is_update(const TraceKind& kind, OpCode code) {
    switch (code) {
        case OpCode::Insert:
        case OpCode::Delete: return true;
        case OpCode::Write: return kind.family != TraceKind::Family::Array;
        default: return false;
    }
}

std::vector<uint64_t> initial_payload(const TraceHeader& header) { return detail::initial_payload(header); }

unsigned arity(OpCode code) { return code == OpCode::Access || code == OpCode::Delete ? 1 : 2; }

Trace parse_trace(std::istream& in) {
    Trace trace;
    bool has_header = false;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        auto words = split_words(text);
        if (words.empty()) continue;
        if (!has_header) {
            trace.header = parse_header(words, line);
            has_header = true;
            continue;
        }
        std::optional<Expected> expected;
        if (words.size() >= 2 && words[words.size() - 2] == "=") {
            const auto token = words.back();
            if (token == "none") {
                expected = Expected{};
            } else if (const auto value = parse_number(token)) {
                expected = Expected{*value};
            } else {
                throw ParseError(line, "expected answer '" + std::string(token) + "' is neither a number nor none");
            }
            words.resize(words.size() - 2);
        }
        if (words.empty() || words[0].size() != 1 || std::string_view("ARSIDW").find(words[0][0]) == std::string_view::npos) {
            throw ParseError(line, "unknown operation '" + std::string(words.empty() ? "" : words[0]) + "'");
        }
        Op op;
        op.code = static_cast<OpCode>(words[0][0]);
        op.line = line;
        op.expected = expected;
        if (!allowed(trace.header.kind, op.code)) {
            throw ParseError(line, "operation " + std::string(words[0]) + " is not defined for " + to_string(trace.header.kind));
        }
        if (words.size() != 1 + arity(op.code)) {
            throw ParseError(line, std::string(words[0]) + " takes " + std::to_string(arity(op.code)) + " argument(s)");
        }
        op.first = parse_arg(words[1], line);
        if (arity(op.code) == 2) op.second = parse_arg(words[2], line);
        trace.ops.push_back(op);
    }
    if (!has_header) throw ParseError(line + 1, "missing header line (kind=... n0=... seed=...)");
    return trace;
}

Trace parse_trace(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_trace(in);
}

std::string format_op(const Op& op) {
    std::string out(1, static_cast<char>(op.code));
    out += " " + format_arg(op.first);
    if (arity(op.code) == 2) out += " " + format_arg(op.second);
    if (op.expected) out += " = " + (op.expected->value ? std::to_string(*op.expected->value) : std::string("none"));
    return out;
}

void write_trace(std::ostream& out, const Trace& trace) {
    out << kTraceMagic << '\n';
    out << "kind=" << to_string(trace.header.kind) << " n0=" << trace.header.n0 << " seed=" << trace.header.seed << '\n';
    for (const auto& op : trace.ops) out << format_op(op) << '\n';
}

namespace {

template <class Oracle>
Trace generate_with(const GenerateOptions& options, std::optional<Oracle> oracle) {
    using detail::Rng;
    Trace trace;
    trace.header = {options.kind, options.n0, options.seed};
    trace.ops.reserve(options.ops);
    Rng decide(options.seed ^ detail::kGenerateSalt);
    Rng resolver(options.seed ^ detail::kResolveSalt);
    const bool arrays = options.kind.family == TraceKind::Family::Array;
    const bool bits = options.kind.family == TraceKind::Family::Bits;
    uint64_t n = options.n0;
    for (uint64_t t = 0; t < options.ops; ++t) {
        Op op;
        if (decide.chance(1.0 / options.q)) {
            static constexpr OpCode kBitUpdates[] = {OpCode::Insert, OpCode::Delete, OpCode::Write};
            static constexpr OpCode kOtherUpdates[] = {OpCode::Insert, OpCode::Delete};
            op.code = bits ? kBitUpdates[decide.below(3)] : kOtherUpdates[decide.below(2)];
            // Nothing to delete or overwrite in an empty structure.
            if (n == 0) op.code = OpCode::Insert;
        } else {
            static constexpr OpCode kArrayQueries[] = {OpCode::Access, OpCode::Write};
            static constexpr OpCode kOtherQueries[] = {OpCode::Access, OpCode::Rank, OpCode::Select};
            op.code = arrays ? kArrayQueries[decide.below(2)] : kOtherQueries[decide.below(3)];
            if (n == 0) op.code = arrays ? OpCode::Insert : OpCode::Rank;
        }
        if (oracle) {
            const auto r = detail::resolve(options.kind, op, *oracle, resolver);
            op.first = Arg::literal(r.first);
            if (arity(op.code) == 2) op.second = Arg::literal(r.second);
            const auto outcome = oracle->exec(r);
            if (outcome.present) op.expected = Expected{outcome.value};
        }
        if (op.code == OpCode::Insert) ++n;
        if (op.code == OpCode::Delete) --n;
        trace.ops.push_back(op);
    }
    return trace;
}

}  // namespace

Trace generate(const GenerateOptions& options) {
    if (!(options.q >= 1.0)) throw std::invalid_argument("q must be at least 1");
    if (options.ops < 1) throw std::invalid_argument("ops must be at least 1");
    const TraceHeader header{options.kind, options.n0, options.seed};
    if (!options.literal) return generate_with<detail::BitsOracle>(options, std::nullopt);
    const auto payload = detail::initial_payload(header);
    switch (options.kind.family) {
        case TraceKind::Family::Bits: return generate_with(options, std::optional<detail::BitsOracle>(std::in_place, payload));
        case TraceKind::Family::Array:
            return generate_with(options, std::optional<detail::ArrayOracle>(std::in_place, static_cast<unsigned>(options.kind.param), payload));
        case TraceKind::Family::Seq: return generate_with(options, std::optional<detail::SeqOracle>(std::in_place, options.kind.param, payload));
    }
    return {};
}

}  // namespace adb::harness
