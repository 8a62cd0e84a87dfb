#include "adb/leaf.hpp"

#include <bit>
#include <cassert>

#include "adb/broadword.hpp"

namespace adb {

using broadword::kWordBits;
using broadword::low_mask;
using broadword::select_in_word;

namespace {

// Word `w` of a width-1 stream as seen when searching for `bit`, with
// positions past the logical end masked off.
uint64_t view_word(const PackedUnits& units, uint64_t w, bool bit) {
    uint64_t word = units.words()[w];
    if (!bit) word = ~word;
    const uint64_t end = units.bit_size();
    if ((w + 1) * kWordBits > end) word &= low_mask(end - w * kWordBits);
    return word;
}

std::vector<uint64_t> sample_positions(const PackedUnits& units, bool bit, uint64_t step) {
    std::vector<uint64_t> samples;
    uint64_t seen = 0;
    uint64_t target = 1;
    const auto nwords = units.words().size();
    for (uint64_t w = 0; w < nwords; ++w) {
        const uint64_t word = view_word(units, w, bit);
        const auto count = static_cast<uint64_t>(std::popcount(word));
        while (target <= seen + count) {
            samples.push_back(w * kWordBits + select_in_word(word, static_cast<unsigned>(target - seen - 1)));
            target += step;
        }
        seen += count;
    }
    return samples;
}

}  // namespace

std::optional<uint64_t> DynamicLeaf::select(bool bit, uint64_t j) const {
    if (j == 0) return std::nullopt;
    const auto nwords = units_.words().size();
    for (uint64_t w = 0; w < nwords; ++w) {
        const uint64_t word = view_word(units_, w, bit);
        const auto count = static_cast<uint64_t>(std::popcount(word));
        if (j <= count) return w * kWordBits + select_in_word(word, static_cast<unsigned>(j - 1));
        j -= count;
    }
    return std::nullopt;
}

StaticLeaf::StaticLeaf(PackedUnits units, bool index) : units_(std::move(units)), indexed_(index && units_.width() == 1) {
    if (!indexed()) return;
    const auto words = units_.words();
    const uint64_t blocks_per_sb = kSuperblockBits / kWordBits;
    const uint64_t nsb = (units_.bit_size() + kSuperblockBits - 1) / kSuperblockBits;
    directory_.assign(2 * (nsb + 1), 0);
    uint64_t running = 0;
    for (uint64_t sb = 0; sb < nsb; ++sb) {
        directory_[2 * sb] = running;
        uint64_t packed = 0;
        uint64_t relative = 0;
        for (uint64_t blk = 0; blk < blocks_per_sb; ++blk) {
            if (blk > 0) packed |= relative << (9 * (blk - 1));
            const uint64_t w = sb * blocks_per_sb + blk;
            if (w < words.size()) relative += std::popcount(words[w]);
        }
        directory_[2 * sb + 1] = packed;
        running += relative;
    }
    directory_[2 * nsb] = running;
    ones_ = running;
    select1_samples_ = sample_positions(units_, true, kSelectSample);
    select0_samples_ = sample_positions(units_, false, kSelectSample);
}

uint64_t StaticLeaf::count_before(bool bit, uint64_t sb) const {
    const uint64_t ones = ones_before(sb);
    if (bit) return ones;
    const uint64_t start = sb * kSuperblockBits;
    return (start < units_.size() ? start : units_.size()) - ones;
}

uint64_t StaticLeaf::block_count(bool bit, uint64_t sb, unsigned block) const {
    const uint64_t ones = block == 0 ? 0 : (directory_[2 * sb + 1] >> (9 * (block - 1))) & 0x1FF;
    return bit ? ones : block * kWordBits - ones;
}

uint64_t StaticLeaf::rank1(uint64_t i) const {
    assert(indexed() && i <= size());
    if (i == size()) return ones_;
    const uint64_t sb = i / kSuperblockBits;
    const auto block = static_cast<unsigned>((i / kWordBits) % (kSuperblockBits / kWordBits));
    return ones_before(sb) + block_count(true, sb, block) +
           broadword::rank_in_word(units_.words()[i / kWordBits], i % kWordBits);
}

std::optional<uint64_t> StaticLeaf::select(bool bit, uint64_t j) const {
    assert(indexed());
    const uint64_t total = bit ? ones_ : size() - ones_;
    if (j == 0 || j > total) return std::nullopt;
    const auto& samples = bit ? select1_samples_ : select0_samples_;
    const uint64_t k = (j - 1) / kSelectSample;
    uint64_t lo = samples[k] / kSuperblockBits;
    uint64_t hi = k + 1 < samples.size() ? samples[k + 1] / kSuperblockBits : superblocks() - 2;
    // Largest superblock in [lo, hi] with fewer than j occurrences before it.
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (count_before(bit, mid) < j) lo = mid;
        else hi = mid - 1;
    }
    const uint64_t sb = lo;
    uint64_t rest = j - count_before(bit, sb);
    const uint64_t blocks_per_sb = kSuperblockBits / kWordBits;
    const uint64_t nwords = units_.words().size();
    unsigned block = 0;
    for (unsigned blk = 1; blk < blocks_per_sb; ++blk) {
        if (sb * blocks_per_sb + blk >= nwords || block_count(bit, sb, blk) >= rest) break;
        block = blk;
    }
    rest -= block_count(bit, sb, block);
    const uint64_t w = sb * blocks_per_sb + block;
    return w * kWordBits + select_in_word(view_word(units_, w, bit), static_cast<unsigned>(rest - 1));
}

uint64_t StaticLeaf::write(uint64_t i, uint64_t value) {
    assert(!indexed());
    const uint64_t previous = units_.get(i);
    units_.set(i, value);
    return previous;
}

bool StaticLeaf::consistent() const {
    if (!indexed()) return directory_.empty() && select1_samples_.empty() && select0_samples_.empty();
    if (ones_ != units_.popcount_prefix(units_.size())) return false;
    for (uint64_t p = 0; p <= units_.size(); p += kWordBits) {
        if (rank1(p) != units_.popcount_prefix(p)) return false;
    }
    for (const bool bit : {false, true}) {
        const auto& samples = bit ? select1_samples_ : select0_samples_;
        const uint64_t total = bit ? ones_ : size() - ones_;
        if (samples.size() != (total + kSelectSample - 1) / kSelectSample) return false;
        for (uint64_t k = 0; k < samples.size(); ++k) {
            const uint64_t pos = samples[k];
            if (pos >= size() || (units_.get(pos) != 0) != bit) return false;
            const uint64_t ones_before = units_.popcount_prefix(pos);
            if ((bit ? ones_before : pos - ones_before) != k * kSelectSample) return false;
        }
    }
    return true;
}

}  // namespace adb
