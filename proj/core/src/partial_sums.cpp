#include "adb/partial_sums.hpp"

#include <cassert>

namespace adb {

uint64_t PartialSums::get(SumField field, std::size_t k) const {
    switch (field) {
        case SumField::Size: return sizes_[k];
        case SumField::Ones: return ones(k);
        case SumField::Zeros: return sizes_[k] - ones(k);
    }
    return 0;
}

uint64_t PartialSums::prefix(SumField field, std::size_t k) const {
    uint64_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += get(field, i);
    return sum;
}

std::optional<PartialSums::Route> PartialSums::route(SumField field, uint64_t target) const {
    uint64_t consumed = 0;
    for (std::size_t k = 0; k < count(); ++k) {
        const uint64_t value = get(field, k);
        if (consumed + value >= target) return Route{k, consumed};
        consumed += value;
    }
    return std::nullopt;
}

void PartialSums::insert(std::size_t k, uint64_t size, uint64_t ones) {
    sizes_.insert(sizes_.begin() + static_cast<std::ptrdiff_t>(k), size);
    if (track_ones_) ones_.insert(ones_.begin() + static_cast<std::ptrdiff_t>(k), ones);
}

void PartialSums::erase(std::size_t k) {
    sizes_.erase(sizes_.begin() + static_cast<std::ptrdiff_t>(k));
    if (track_ones_) ones_.erase(ones_.begin() + static_cast<std::ptrdiff_t>(k));
}

void PartialSums::assign(std::size_t k, uint64_t size, uint64_t ones) {
    sizes_[k] = size;
    if (track_ones_) ones_[k] = ones;
}

void PartialSums::adjust(std::size_t k, int64_t size_delta, int64_t ones_delta) {
    sizes_[k] = static_cast<uint64_t>(static_cast<int64_t>(sizes_[k]) + size_delta);
    if (track_ones_) ones_[k] = static_cast<uint64_t>(static_cast<int64_t>(ones_[k]) + ones_delta);
    assert(!track_ones_ || ones_[k] <= sizes_[k]);
}

}  // namespace adb
