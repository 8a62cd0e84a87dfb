#include "adb/packed_units.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

#include "adb/broadword.hpp"

namespace adb {

using broadword::kWordBits;
using broadword::low_mask;
using broadword::words_for;

PackedUnits::PackedUnits(unsigned width, uint64_t count) : words_(words_for(count * width)), size_(count), width_(width) {
    if (width == 0 || width > kWordBits) throw std::invalid_argument("unit width must be in [1, 64]");
}

PackedUnits PackedUnits::from_string(std::string_view bits) {
    PackedUnits out(1, bits.size());
    for (uint64_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bit string must contain only '0' and '1'");
        if (bits[i] == '1') out.set(i, 1);
    }
    return out;
}

uint64_t PackedUnits::read_bits(uint64_t offset, unsigned count) const {
    if (count == 0) return 0;
    const uint64_t word = offset / kWordBits;
    const unsigned shift = offset % kWordBits;
    uint64_t value = words_[word] >> shift;
    if (shift + count > kWordBits) value |= words_[word + 1] << (kWordBits - shift);
    return value & low_mask(count);
}

void PackedUnits::write_bits(uint64_t offset, unsigned count, uint64_t value) {
    if (count == 0) return;
    value &= low_mask(count);
    const uint64_t word = offset / kWordBits;
    const unsigned shift = offset % kWordBits;
    const uint64_t mask = low_mask(count) << shift;
    words_[word] = (words_[word] & ~mask) | (value << shift);
    if (shift + count > kWordBits) {
        const unsigned spill = shift + count - kWordBits;
        const uint64_t high_mask = low_mask(spill);
        words_[word + 1] = (words_[word + 1] & ~high_mask) | (value >> (kWordBits - shift));
    }
}

void PackedUnits::resize_exact(uint64_t new_size) {
    const uint64_t need = words_for(new_size * width_);
    if (need != words_.size()) {
        std::vector<uint64_t> next(need);
        std::copy_n(words_.begin(), std::min<uint64_t>(need, words_.size()), next.begin());
        words_.swap(next);
    }
    // Clear any stale bits past the logical end so equality and popcounts stay exact.
    const uint64_t used = new_size * width_;
    if (used % kWordBits != 0 && !words_.empty()) words_.back() &= low_mask(used % kWordBits);
    size_ = new_size;
}

void PackedUnits::insert(uint64_t i, uint64_t value) {
    assert(i <= size_);
    const uint64_t old_bits = bit_size();
    resize_exact(size_ + 1);
    // Move bits [i*w, old_bits) up by w, highest chunk first.
    const uint64_t start = i * width_;
    uint64_t end = old_bits;
    while (end > start) {
        const auto chunk = static_cast<unsigned>(std::min<uint64_t>(kWordBits, end - start));
        end -= chunk;
        write_bits(end + width_, chunk, read_bits(end, chunk));
    }
    set(i, value);
}

uint64_t PackedUnits::erase(uint64_t i) {
    assert(i < size_);
    const uint64_t removed = get(i);
    const uint64_t end = bit_size();
    uint64_t pos = (i + 1) * width_;
    while (pos < end) {
        const auto chunk = static_cast<unsigned>(std::min<uint64_t>(kWordBits, end - pos));
        write_bits(pos - width_, chunk, read_bits(pos, chunk));
        pos += chunk;
    }
    resize_exact(size_ - 1);
    return removed;
}

void PackedUnits::append(const PackedUnits& src, uint64_t from, uint64_t count) {
    assert(src.width_ == width_ && from + count <= src.size_);
    uint64_t dst = bit_size();
    resize_exact(size_ + count);
    uint64_t pos = from * width_;
    const uint64_t end = (from + count) * width_;
    while (pos < end) {
        const auto chunk = static_cast<unsigned>(std::min<uint64_t>(kWordBits, end - pos));
        write_bits(dst, chunk, src.read_bits(pos, chunk));
        pos += chunk;
        dst += chunk;
    }
}

void PackedUnits::assign(uint64_t at, const PackedUnits& src) {
    assert(src.width_ == width_ && at + src.size_ <= size_);
    uint64_t dst = at * width_;
    uint64_t pos = 0;
    const uint64_t end = src.bit_size();
    while (pos < end) {
        const auto chunk = static_cast<unsigned>(std::min<uint64_t>(kWordBits, end - pos));
        write_bits(dst, chunk, src.read_bits(pos, chunk));
        pos += chunk;
        dst += chunk;
    }
}

PackedUnits PackedUnits::slice(uint64_t from, uint64_t count) const {
    PackedUnits out(width_);
    out.append(*this, from, count);
    return out;
}

uint64_t PackedUnits::popcount_prefix(uint64_t bits) const {
    assert(bits <= bit_size());
    uint64_t total = 0;
    const uint64_t full = bits / kWordBits;
    for (uint64_t w = 0; w < full; ++w) total += std::popcount(words_[w]);
    if (bits % kWordBits != 0) total += broadword::rank_in_word(words_[full], bits % kWordBits);
    return total;
}

std::string PackedUnits::to_string() const {
    std::string out;
    if (width_ == 1) {
        out.reserve(size_);
        for (uint64_t i = 0; i < size_; ++i) out.push_back(get(i) ? '1' : '0');
        return out;
    }
    for (uint64_t i = 0; i < size_; ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(get(i));
    }
    return out;
}

bool operator==(const PackedUnits& x, const PackedUnits& y) {
    return x.width_ == y.width_ && x.size_ == y.size_ && x.words_ == y.words_;
}

}  // namespace adb
