#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "adb/bitvector.hpp"
#include "adb/fixed_array.hpp"
#include "adb/wavelet_matrix.hpp"

namespace {

adb::PackedUnits random_bits(uint64_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    adb::PackedUnits bits(1, n);
    for (uint64_t i = 0; i < n; ++i) bits.set(i, rng() & 1);
    return bits;
}

uint64_t below(std::mt19937_64& rng, uint64_t n) { return static_cast<uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64); }

// Mixed stream at query:update ratio q on 2^20 bits; reports internal visits per op.
void BM_BitvectorMixed(benchmark::State& state) {
    const uint64_t q = static_cast<uint64_t>(state.range(0));
    auto bv = adb::AdaptiveBitvector::from_bits(random_bits(uint64_t{1} << 20, 1));
    std::mt19937_64 rng(2);
    const auto before = bv.stats();
    for (auto _ : state) {
        const uint64_t n = bv.size();
        if (below(rng, q) == 0) {
            if (rng() & 1) {
                bv.insert(1 + below(rng, n + 1), rng() & 1);
            } else {
                benchmark::DoNotOptimize(bv.erase(1 + below(rng, n)));
            }
        } else {
            benchmark::DoNotOptimize(bv.rank(true, below(rng, n + 1)));
        }
    }
    const auto after = bv.stats();
    state.counters["visits/op"] = benchmark::Counter(static_cast<double>(after.internal_visits - before.internal_visits), benchmark::Counter::kAvgIterations);
    state.counters["flattens"] = static_cast<double>(after.flatten_count - before.flatten_count);
}
BENCHMARK(BM_BitvectorMixed)->Arg(1)->Arg(16)->Arg(256)->Arg(4096)->Arg(65536);

void BM_BitvectorSelect(benchmark::State& state) {
    auto bv = adb::AdaptiveBitvector::from_bits(random_bits(uint64_t{1} << 20, 3));
    std::mt19937_64 rng(4);
    const uint64_t ones = bv.count(true);
    for (auto _ : state) benchmark::DoNotOptimize(bv.select(true, 1 + below(rng, ones)));
}
BENCHMARK(BM_BitvectorSelect);

void BM_ArrayReadWrite(benchmark::State& state) {
    const unsigned width = static_cast<unsigned>(state.range(0));
    std::mt19937_64 rng(5);
    std::vector<uint64_t> values(1 << 18);
    const uint64_t mask = width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
    for (auto& v : values) v = rng() & mask;
    auto array = adb::AdaptiveArray::from_values(width, values);
    for (auto _ : state) {
        const uint64_t i = 1 + below(rng, array.size());
        if (rng() & 1) {
            benchmark::DoNotOptimize(array.read(i));
        } else {
            benchmark::DoNotOptimize(array.write(i, rng() & mask));
        }
    }
}
BENCHMARK(BM_ArrayReadWrite)->Arg(1)->Arg(8)->Arg(31);

void BM_WaveletRank(benchmark::State& state) {
    const uint64_t sigma = static_cast<uint64_t>(state.range(0));
    std::mt19937_64 rng(6);
    std::vector<uint64_t> symbols(1 << 16);
    for (auto& c : symbols) c = 1 + below(rng, sigma);
    auto wm = adb::AdaptiveWaveletMatrix::from_symbols(sigma, symbols);
    for (auto _ : state) benchmark::DoNotOptimize(wm.rank(1 + below(rng, sigma), below(rng, wm.size() + 1)));
}
BENCHMARK(BM_WaveletRank)->Arg(2)->Arg(5)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
