#include "adb/wavelet_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace adb {

AdaptiveWaveletMatrix::AdaptiveWaveletMatrix(uint64_t sigma) : sigma_(sigma) {
    if (sigma < 2) throw std::invalid_argument("alphabet size must be at least 2");
    const auto depth = static_cast<unsigned>(std::bit_width(sigma - 1));
    levels_.resize(depth);
    zeros_.assign(depth, 0);
    counts_.assign(sigma + 1, 0);
    order_fenwick_.assign((uint64_t{1} << depth) + 1, 0);
}

AdaptiveWaveletMatrix AdaptiveWaveletMatrix::from_symbols(uint64_t sigma, const std::vector<uint64_t>& symbols) {
    AdaptiveWaveletMatrix wm(sigma);
    for (const uint64_t c : symbols) wm.require_symbol(c);
    std::vector<uint64_t> current = symbols;
    std::vector<uint64_t> next;
    next.reserve(current.size());
    for (unsigned d = 0; d < wm.levels(); ++d) {
        PackedUnits bits(1, current.size());
        next.clear();
        for (uint64_t i = 0; i < current.size(); ++i) {
            if (wm.code_bit(current[i], d)) bits.set(i, 1);
            else next.push_back(current[i]);
        }
        wm.zeros_[d] = next.size();
        for (const uint64_t c : current) {
            if (wm.code_bit(c, d)) next.push_back(c);
        }
        wm.levels_[d] = AdaptiveBitvector::from_bits(std::move(bits));
        current.swap(next);
    }
    for (const uint64_t c : symbols) wm.add_count(c, 1);
    wm.size_ = symbols.size();
    return wm;
}

void AdaptiveWaveletMatrix::require_symbol(uint64_t c) const {
    if (c < 1 || c > sigma_) throw std::out_of_range("symbol " + std::to_string(c) + " outside [1, " + std::to_string(sigma_) + "]");
}

uint64_t AdaptiveWaveletMatrix::order_key(uint64_t c) const {
    // The bottom level orders symbols by their code read from the last level up.
    uint64_t key = 0;
    for (unsigned d = levels(); d-- > 0;) key = (key << 1) | (code_bit(c, d) ? 1 : 0);
    return key;
}

void AdaptiveWaveletMatrix::add_count(uint64_t c, int64_t delta) {
    counts_[c] = static_cast<uint64_t>(static_cast<int64_t>(counts_[c]) + delta);
    for (uint64_t k = order_key(c) + 1; k < order_fenwick_.size(); k += k & (~k + 1)) order_fenwick_[k] += delta;
}

uint64_t AdaptiveWaveletMatrix::block_start(uint64_t c) const {
    int64_t sum = 0;
    for (uint64_t k = order_key(c); k > 0; k -= k & (~k + 1)) sum += order_fenwick_[k];
    return static_cast<uint64_t>(sum);
}

uint64_t AdaptiveWaveletMatrix::count(uint64_t c) const {
    require_symbol(c);
    return counts_[c];
}

uint64_t AdaptiveWaveletMatrix::access(uint64_t i) {
    if (i < 1 || i > size_) throw std::out_of_range("access: position " + std::to_string(i) + " outside [1, " + std::to_string(size_) + "]");
    uint64_t code = 0;
    uint64_t p = i;
    for (unsigned d = 0; d < levels(); ++d) {
        const auto [bit, ones_before] = levels_[d].access_rank(p);
        code = (code << 1) | (bit ? 1 : 0);
        p = bit ? zeros_[d] + ones_before + 1 : p - ones_before;
    }
    return code + 1;
}

uint64_t AdaptiveWaveletMatrix::rank(uint64_t c, uint64_t i) {
    require_symbol(c);
    if (i > size_) throw std::out_of_range("rank: position " + std::to_string(i) + " outside [0, " + std::to_string(size_) + "]");
    uint64_t p = i;
    for (unsigned d = 0; d < levels(); ++d) {
        const uint64_t ones = levels_[d].rank(true, p);
        p = code_bit(c, d) ? zeros_[d] + ones : p - ones;
    }
    return p - block_start(c);
}

std::optional<uint64_t> AdaptiveWaveletMatrix::select(uint64_t c, uint64_t j) {
    require_symbol(c);
    if (j == 0) throw std::out_of_range("select: occurrence number must be at least 1");
    if (j > counts_[c]) return std::nullopt;
    uint64_t p = block_start(c) + j;
    for (unsigned d = levels(); d-- > 0;) {
        const bool bit = code_bit(c, d);
        p = *levels_[d].select(bit, bit ? p - zeros_[d] : p);
    }
    return p;
}

void AdaptiveWaveletMatrix::insert(uint64_t i, uint64_t c) {
    require_symbol(c);
    if (i < 1 || i > size_ + 1) throw std::out_of_range("insert: position " + std::to_string(i) + " outside [1, " + std::to_string(size_ + 1) + "]");
    uint64_t p = i;
    for (unsigned d = 0; d < levels(); ++d) {
        const bool bit = code_bit(c, d);
        const uint64_t ones_before = levels_[d].insert_rank(p, bit);
        if (!bit) ++zeros_[d];
        p = bit ? zeros_[d] + ones_before + 1 : p - ones_before;
    }
    add_count(c, 1);
    ++size_;
}

uint64_t AdaptiveWaveletMatrix::erase(uint64_t i) {
    if (size_ == 0) throw std::out_of_range("delete: sequence is empty");
    if (i < 1 || i > size_) throw std::out_of_range("delete: position " + std::to_string(i) + " outside [1, " + std::to_string(size_) + "]");
    uint64_t code = 0;
    uint64_t p = i;
    for (unsigned d = 0; d < levels(); ++d) {
        const auto [bit, ones_before] = levels_[d].erase_rank(p);
        code = (code << 1) | (bit ? 1 : 0);
        if (!bit) --zeros_[d];
        p = bit ? zeros_[d] + ones_before + 1 : p - ones_before;
    }
    add_count(code + 1, -1);
    --size_;
    return code + 1;
}

std::vector<uint64_t> AdaptiveWaveletMatrix::symbols() const {
    std::vector<PackedUnits> bits;
    std::vector<std::vector<uint64_t>> ranks;
    for (const auto& level : levels_) {
        bits.push_back(level.bits());
        std::vector<uint64_t> prefix(bits.back().size() + 1, 0);
        for (uint64_t p = 0; p < bits.back().size(); ++p) prefix[p + 1] = prefix[p] + bits.back().get(p);
        ranks.push_back(std::move(prefix));
    }
    std::vector<uint64_t> out(size_);
    for (uint64_t i = 0; i < size_; ++i) {
        uint64_t code = 0;
        uint64_t p = i;
        for (unsigned d = 0; d < levels(); ++d) {
            if (p >= bits[d].size()) return {};
            const uint64_t bit = bits[d].get(p);
            code = (code << 1) | bit;
            p = bit ? zeros_[d] + ranks[d][p] : p - ranks[d][p];
        }
        out[i] = code + 1;
    }
    return out;
}

std::vector<std::string> AdaptiveWaveletMatrix::check() const {
    std::vector<std::string> out;
    for (unsigned d = 0; d < levels(); ++d) {
        const std::string where = "level " + std::to_string(d);
        if (levels_[d].size() != size_) out.push_back(where + ": holds " + std::to_string(levels_[d].size()) + " bits, sequence has " + std::to_string(size_));
        if (levels_[d].count(false) != zeros_[d]) out.push_back(where + ": cached zero count " + std::to_string(zeros_[d]) + " disagrees with rank0(n)");
        for (const auto& violation : levels_[d].check()) out.push_back(where + ": " + violation);
    }
    if (!out.empty()) return out;
    std::vector<uint64_t> tally(sigma_ + 1, 0);
    for (const uint64_t c : symbols()) {
        if (c < 1 || c > sigma_) {
            out.push_back("decoded symbol " + std::to_string(c) + " outside the alphabet");
            return out;
        }
        ++tally[c];
    }
    for (uint64_t c = 1; c <= sigma_; ++c) {
        if (tally[c] != counts_[c]) out.push_back("symbol " + std::to_string(c) + ": cached count disagrees with the levels");
        if (block_start(c) + counts_[c] > size_) out.push_back("symbol " + std::to_string(c) + ": block start out of range");
    }
    return out;
}

void AdaptiveWaveletMatrix::set_observer(const std::function<void(unsigned, const TreeEvent&)>& observer) {
    for (unsigned d = 0; d < levels(); ++d) {
        if (!observer) {
            levels_[d].set_observer(nullptr);
        } else {
            levels_[d].set_observer([observer, d](const TreeEvent& e) { observer(d, e); });
        }
    }
}

}  // namespace adb
