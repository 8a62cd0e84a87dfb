#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adb::harness {

/// Structure under test: bits, array:<width> or seq:<sigma>.
struct TraceKind {
    enum class Family { Bits, Array, Seq };
    Family family = Family::Bits;
    uint64_t param = 1;  ///< cell width for arrays, alphabet size for sequences

    friend bool operator==(const TraceKind&, const TraceKind&) = default;
};

std::string to_string(const TraceKind& kind);
/// Throws std::invalid_argument on anything but bits, array:1..64, seq:2+.
TraceKind parse_kind(std::string_view text);

struct TraceHeader {
    TraceKind kind;
    uint64_t n0 = 0;    ///< initial payload, drawn from the seed
    uint64_t seed = 0;  ///< seeds the payload and the resolution of symbolic arguments
};

/// The n0 initial units a run starts from: bits, cells or symbols drawn
/// uniformly from the header seed.
std::vector<uint64_t> initial_payload(const TraceHeader& header);

enum class OpCode : char { Access = 'A', Rank = 'R', Select = 'S', Insert = 'I', Delete = 'D', Write = 'W' };

/// Argument token: a literal number, or "U" for uniform over the range valid
/// when the operation executes.
struct Arg {
    bool uniform = true;
    uint64_t value = 0;

    static Arg literal(uint64_t v) { return {false, v}; }
    friend bool operator==(const Arg&, const Arg&) = default;
};

/// Optional "= answer" suffix; `none` means select found nothing.
struct Expected {
    std::optional<uint64_t> value;
    friend bool operator==(const Expected&, const Expected&) = default;
};

/// Bits:      A i | R b i | S b j | I i b | D i | W i b
/// Arrays:    A i | W i v | I i v | D i          (W is a query)
/// Sequences: A i | R c i | S c j | I i c | D i
struct Op {
    OpCode code = OpCode::Access;
    Arg first;
    Arg second;  ///< unused for A and D
    std::optional<Expected> expected;
    std::size_t line = 0;  ///< 1-based source line, 0 when generated

    friend bool operator==(const Op& x, const Op& y) {
        return x.code == y.code && x.first == y.first && x.second == y.second && x.expected == y.expected;
    }
};

struct Trace {
    TraceHeader header;
    std::vector<Op> ops;
};

/// True when `code` counts as an update for `kind`.
bool is_update(const TraceKind& kind, OpCode code);
/// Number of arguments `code` takes.
unsigned arity(OpCode code);

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

inline constexpr std::string_view kTraceMagic = "# adb-trace v1";

Trace parse_trace(std::istream& in);
Trace parse_trace(std::string_view text);
void write_trace(std::ostream& out, const Trace& trace);
std::string format_op(const Op& op);

struct GenerateOptions {
    TraceKind kind;
    uint64_t n0 = 0;
    uint64_t ops = 1000;
    double q = 1.0;  ///< each op is an update with probability 1/q
    uint64_t seed = 1;
    /// Resolve every argument and annotate every answer, using the oracle.
    bool literal = false;
};

/// Throws std::invalid_argument when q < 1 or ops < 1.
Trace generate(const GenerateOptions& options);

}  // namespace adb::harness
