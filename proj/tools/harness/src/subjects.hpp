#pragma once

// Uniform wrappers over the adaptive structures and their oracles, plus the
// deterministic randomness shared by the generator and the runner.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adb/bitvector.hpp"
#include "adb/fixed_array.hpp"
#include "adb/oracle.hpp"
#include "adb/wavelet_matrix.hpp"
#include "adb_harness/trace.hpp"

namespace adb::harness::detail {

inline constexpr uint64_t kResolveSalt = 0x9E3779B97F4A7C15ULL;
inline constexpr uint64_t kGenerateSalt = 0xD1B54A32D192ED03ULL;

/// mt19937_64 with range reduction by multiply-shift, so draws do not depend
/// on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n >= 1.
    uint64_t below(uint64_t n) { return static_cast<uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64); }
    /// Uniform in [lo, hi].
    uint64_t between(uint64_t lo, uint64_t hi) {
        if (lo == 0 && hi == ~uint64_t{0}) return engine_();
        return lo + below(hi - lo + 1);
    }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  private:
    std::mt19937_64 engine_;
};

/// Smallest and largest value or symbol a unit of `kind` can hold.
inline uint64_t min_value(const TraceKind& kind) { return kind.family == TraceKind::Family::Seq ? 1 : 0; }
inline uint64_t max_value(const TraceKind& kind) {
    switch (kind.family) {
        case TraceKind::Family::Bits: return 1;
        case TraceKind::Family::Array: return kind.param >= 64 ? ~uint64_t{0} : (uint64_t{1} << kind.param) - 1;
        case TraceKind::Family::Seq: return kind.param;
    }
    return 1;
}

inline std::vector<uint64_t> initial_payload(const TraceHeader& header) {
    Rng rng(header.seed);
    std::vector<uint64_t> out(header.n0);
    for (auto& v : out) v = rng.between(min_value(header.kind), max_value(header.kind));
    return out;
}

struct Resolved {
    OpCode code;
    uint64_t first = 0;
    uint64_t second = 0;
};

/// Result of one operation; `present` is false for inserts, which return nothing.
struct Outcome {
    bool present = false;
    std::optional<uint64_t> value;
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline Outcome answer(uint64_t v) { return {true, v}; }
inline Outcome answer(std::optional<uint64_t> v) { return {true, v}; }

struct Totals {
    uint64_t query_visits = 0;
    uint64_t update_visits = 0;
    uint64_t flatten_count = 0;
    uint64_t split_count = 0;

    void add(const LifetimeStats& s) {
        query_visits += s.query_visits;
        update_visits += s.update_visits;
        flatten_count += s.flatten_count;
        split_count += s.split_count;
    }
};

class ResolveError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Replaces every "U" by a uniform draw over the range valid in `state` now.
/// `state` provides size() and count(value).
template <class State>
Resolved resolve(const TraceKind& kind, const Op& op, const State& state, Rng& rng) {
    const uint64_t n = state.size();
    auto position = [&](const Arg& arg, uint64_t lo, uint64_t hi) {
        if (!arg.uniform) return arg.value;
        if (lo > hi) throw ResolveError("no valid position: the structure is empty");
        return rng.between(lo, hi);
    };
    auto value = [&](const Arg& arg) { return arg.uniform ? rng.between(min_value(kind), max_value(kind)) : arg.value; };
    Resolved r{op.code};
    switch (op.code) {
        case OpCode::Access:
        case OpCode::Delete: r.first = position(op.first, 1, n); break;
        case OpCode::Rank:
            r.first = value(op.first);
            r.second = position(op.second, 0, n);
            break;
        case OpCode::Select:
            r.first = value(op.first);
            r.second = position(op.second, 1, std::max<uint64_t>(1, state.count(r.first)));
            break;
        case OpCode::Insert:
            r.first = position(op.first, 1, n + 1);
            r.second = value(op.second);
            break;
        case OpCode::Write:
            r.first = position(op.first, 1, n);
            r.second = value(op.second);
            break;
    }
    return r;
}

inline PackedUnits pack_bits(const std::vector<uint64_t>& payload) {
    PackedUnits bits(1, payload.size());
    for (uint64_t i = 0; i < payload.size(); ++i) bits.set(i, payload[i]);
    return bits;
}

class BitsSubject {
  public:
    explicit BitsSubject(const std::vector<uint64_t>& payload) : bv_(AdaptiveBitvector::from_bits(pack_bits(payload))) {}
    uint64_t size() const { return bv_.size(); }
    uint64_t count(uint64_t v) const { return bv_.count(v != 0); }
    Outcome exec(const Resolved& r) {
        switch (r.code) {
            case OpCode::Access: return answer(bv_.access(r.first) ? 1 : 0);
            case OpCode::Rank: return answer(bv_.rank(bit(r.first), r.second));
            case OpCode::Select: return answer(bv_.select(bit(r.first), r.second));
            case OpCode::Insert: bv_.insert(r.first, bit(r.second)); return {};
            case OpCode::Delete: return answer(bv_.erase(r.first) ? 1 : 0);
            case OpCode::Write: return answer(bv_.write(r.first, bit(r.second)) ? 1 : 0);
        }
        return {};
    }
    Totals totals() const {
        Totals t;
        t.add(bv_.stats());
        return t;
    }
    double overhead() const { return bv_.space_report().overhead_ratio; }
    const AdaptiveBitvector& structure() const { return bv_; }

  private:
    static bool bit(uint64_t v) {
        if (v > 1) throw std::invalid_argument("bit value must be 0 or 1");
        return v == 1;
    }
    AdaptiveBitvector bv_;
};

class BitsOracle {
  public:
    explicit BitsOracle(const std::vector<uint64_t>& payload) : bits_(pack_bits(payload)) {}
    uint64_t size() const { return bits_.size(); }
    uint64_t count(uint64_t v) const { return bits_.count(v != 0); }
    Outcome exec(const Resolved& r) {
        switch (r.code) {
            case OpCode::Access: return answer(bits_.access(r.first) ? 1 : 0);
            case OpCode::Rank: return answer(bits_.rank(r.first != 0, r.second));
            case OpCode::Select: return answer(bits_.select(r.first != 0, r.second));
            case OpCode::Insert: bits_.insert(r.first, r.second != 0); return {};
            case OpCode::Delete: return answer(bits_.erase(r.first) ? 1 : 0);
            case OpCode::Write: return answer(bits_.write(r.first, r.second != 0) ? 1 : 0);
        }
        return {};
    }

  private:
    oracle::NaiveBits bits_;
};

class ArraySubject {
  public:
    ArraySubject(unsigned width, const std::vector<uint64_t>& payload) : array_(AdaptiveArray::from_values(width, payload)) {}
    uint64_t size() const { return array_.size(); }
    uint64_t count(uint64_t) const { return 0; }
    Outcome exec(const Resolved& r) {
        switch (r.code) {
            case OpCode::Access: return answer(array_.read(r.first));
            case OpCode::Write: return answer(array_.write(r.first, r.second));
            case OpCode::Insert: array_.insert(r.first, r.second); return {};
            case OpCode::Delete: return answer(array_.erase(r.first));
            default: throw std::invalid_argument("arrays support only A, W, I and D");
        }
    }
    Totals totals() const {
        Totals t;
        t.add(array_.stats());
        return t;
    }
    double overhead() const { return array_.space_report().overhead_ratio; }

  private:
    AdaptiveArray array_;
};

class ArrayOracle {
  public:
    ArrayOracle(unsigned width, const std::vector<uint64_t>& payload) : cells_(width, payload) {}
    uint64_t size() const { return cells_.size(); }
    uint64_t count(uint64_t) const { return 0; }
    Outcome exec(const Resolved& r) {
        switch (r.code) {
            case OpCode::Access: return answer(cells_.read(r.first));
            case OpCode::Write: return answer(cells_.write(r.first, r.second));
            case OpCode::Insert: cells_.insert(r.first, r.second); return {};
            case OpCode::Delete: return answer(cells_.erase(r.first));
            default: throw std::invalid_argument("arrays support only A, W, I and D");
        }
    }

  private:
    oracle::NaiveCells cells_;
};

class SeqSubject {
  public:
    SeqSubject(uint64_t sigma, const std::vector<uint64_t>& payload) : wm_(AdaptiveWaveletMatrix::from_symbols(sigma, payload)) {}
    uint64_t size() const { return wm_.size(); }
    uint64_t count(uint64_t c) const { return wm_.count(c); }
    Outcome exec(const Resolved& r) {
        switch (r.code) {
            case OpCode::Access: return answer(wm_.access(r.first));
            case OpCode::Rank: return answer(wm_.rank(r.first, r.second));
            case OpCode::Select: return answer(wm_.select(r.first, r.second));
            case OpCode::Insert: wm_.insert(r.first, r.second); return {};
            case OpCode::Delete: return answer(wm_.erase(r.first));
            default: throw std::invalid_argument("sequences do not support W");
        }
    }
    Totals totals() const {
        Totals t;
        for (unsigned d = 0; d < wm_.levels(); ++d) t.add(wm_.level(d).stats());
        return t;
    }
    double overhead() const {
        uint64_t payload = 0;
        uint64_t total = 0;
        for (unsigned d = 0; d < wm_.levels(); ++d) {
            const auto report = wm_.level(d).space_report();
            payload += report.payload_bits;
            total += report.total_bits;
        }
        return payload == 0 ? 0.0 : static_cast<double>(total - payload) / static_cast<double>(payload);
    }

  private:
    AdaptiveWaveletMatrix wm_;
};

class SeqOracle {
  public:
    SeqOracle(uint64_t sigma, const std::vector<uint64_t>& payload) : seq_(sigma, payload) {}
    uint64_t size() const { return seq_.size(); }
    uint64_t count(uint64_t c) const { return seq_.rank(c, seq_.size()); }
    Outcome exec(const Resolved& r) {
        switch (r.code) {
            case OpCode::Access: return answer(seq_.access(r.first));
            case OpCode::Rank: return answer(seq_.rank(r.first, r.second));
            case OpCode::Select: return answer(seq_.select(r.first, r.second));
            case OpCode::Insert: seq_.insert(r.first, r.second); return {};
            case OpCode::Delete: return answer(seq_.erase(r.first));
            default: throw std::invalid_argument("sequences do not support W");
        }
    }

  private:
    oracle::NaiveSeq seq_;
};

}  // namespace adb::harness::detail
