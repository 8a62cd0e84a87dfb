#include "adb/oracle.hpp"

#include <stdexcept>

namespace adb::oracle {

namespace {

void require_range(const char* op, uint64_t i, uint64_t lo, uint64_t hi) {
    if (i < lo || i > hi) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }
}

template <class Vec>
auto at(Vec& v, uint64_t i) -> decltype(v[0])& {
    return v[static_cast<std::size_t>(i - 1)];
}

}  // namespace

NaiveBits::NaiveBits(std::string_view bits) {
    for (const char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bit string must contain only '0' and '1'");
        bits_.push_back(ch == '1');
    }
}

NaiveBits::NaiveBits(const PackedUnits& bits) {
    for (uint64_t i = 0; i < bits.size(); ++i) bits_.push_back(static_cast<uint8_t>(bits.get(i)));
}

bool NaiveBits::access(uint64_t i) const {
    require_range("access", i, 1, size());
    return at(bits_, i) != 0;
}

uint64_t NaiveBits::rank(bool bit, uint64_t i) const {
    require_range("rank", i, 0, size());
    uint64_t count = 0;
    for (uint64_t p = 0; p < i; ++p) count += (bits_[p] != 0) == bit;
    return count;
}

std::optional<uint64_t> NaiveBits::select(bool bit, uint64_t j) const {
    if (j == 0) throw std::out_of_range("select: occurrence number must be at least 1");
    for (uint64_t p = 0; p < size(); ++p) {
        if ((bits_[p] != 0) == bit && --j == 0) return p + 1;
    }
    return std::nullopt;
}

void NaiveBits::insert(uint64_t i, bool bit) {
    require_range("insert", i, 1, size() + 1);
    bits_.insert(bits_.begin() + static_cast<std::ptrdiff_t>(i - 1), bit);
}

bool NaiveBits::erase(uint64_t i) {
    if (size() == 0) throw std::out_of_range("delete: bitvector is empty");
    require_range("delete", i, 1, size());
    const bool removed = at(bits_, i) != 0;
    bits_.erase(bits_.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return removed;
}

bool NaiveBits::write(uint64_t i, bool bit) {
    require_range("write", i, 1, size());
    const bool previous = at(bits_, i) != 0;
    at(bits_, i) = bit;
    return previous;
}

PackedUnits NaiveBits::packed() const {
    PackedUnits out(1, size());
    for (uint64_t p = 0; p < size(); ++p) out.set(p, bits_[p]);
    return out;
}

std::string NaiveBits::to_string() const {
    std::string out;
    for (const uint8_t b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

NaiveCells::NaiveCells(unsigned width, std::vector<uint64_t> values) : width_(width), cells_(std::move(values)) {
    if (width < 1 || width > 64) throw std::invalid_argument("cell width must be in [1, 64]");
    for (const uint64_t v : cells_) check_value(v);
}

void NaiveCells::check_value(uint64_t value) const {
    if (width_ < 64 && (value >> width_) != 0) {
        throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " + std::to_string(width_) + " bits");
    }
}

uint64_t NaiveCells::read(uint64_t i) const {
    require_range("read", i, 1, size());
    return at(cells_, i);
}

uint64_t NaiveCells::write(uint64_t i, uint64_t value) {
    require_range("write", i, 1, size());
    check_value(value);
    const uint64_t previous = at(cells_, i);
    at(cells_, i) = value;
    return previous;
}

void NaiveCells::insert(uint64_t i, uint64_t value) {
    require_range("insert", i, 1, size() + 1);
    check_value(value);
    cells_.insert(cells_.begin() + static_cast<std::ptrdiff_t>(i - 1), value);
}

uint64_t NaiveCells::erase(uint64_t i) {
    if (size() == 0) throw std::out_of_range("delete: array is empty");
    require_range("delete", i, 1, size());
    const uint64_t removed = at(cells_, i);
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return removed;
}

NaiveSeq::NaiveSeq(uint64_t sigma, std::vector<uint64_t> symbols) : sigma_(sigma), symbols_(std::move(symbols)) {
    if (sigma < 2) throw std::invalid_argument("alphabet size must be at least 2");
    for (const uint64_t c : symbols_) check_symbol(c);
}

void NaiveSeq::check_symbol(uint64_t c) const {
    if (c < 1 || c > sigma_) throw std::out_of_range("symbol " + std::to_string(c) + " outside [1, " + std::to_string(sigma_) + "]");
}

uint64_t NaiveSeq::access(uint64_t i) const {
    require_range("access", i, 1, size());
    return at(symbols_, i);
}

uint64_t NaiveSeq::rank(uint64_t c, uint64_t i) const {
    check_symbol(c);
    require_range("rank", i, 0, size());
    uint64_t count = 0;
    for (uint64_t p = 0; p < i; ++p) count += symbols_[p] == c;
    return count;
}

std::optional<uint64_t> NaiveSeq::select(uint64_t c, uint64_t j) const {
    check_symbol(c);
    if (j == 0) throw std::out_of_range("select: occurrence number must be at least 1");
    for (uint64_t p = 0; p < size(); ++p) {
        if (symbols_[p] == c && --j == 0) return p + 1;
    }
    return std::nullopt;
}

void NaiveSeq::insert(uint64_t i, uint64_t c) {
    check_symbol(c);
    require_range("insert", i, 1, size() + 1);
    symbols_.insert(symbols_.begin() + static_cast<std::ptrdiff_t>(i - 1), c);
}

uint64_t NaiveSeq::erase(uint64_t i) {
    if (size() == 0) throw std::out_of_range("delete: sequence is empty");
    require_range("delete", i, 1, size());
    const uint64_t removed = at(symbols_, i);
    symbols_.erase(symbols_.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return removed;
}

}  // namespace adb::oracle
