#include <doctest.h>

#include <random>
#include <stdexcept>

#include "adb/oracle.hpp"
#include "adb/wavelet_matrix.hpp"
#include "support.hpp"

using adb::AdaptiveWaveletMatrix;
using adb::oracle::NaiveSeq;

TEST_SUITE("wavelet_matrix") {

TEST_CASE("rank and select on 1 2 1 3") {
    auto wm = AdaptiveWaveletMatrix::from_symbols(4, {1, 2, 1, 3});
    CHECK(wm.levels() == 2);
    CHECK(wm.rank(1, 3) == 2);
    CHECK(wm.select(3, 1) == 4);
    CHECK(wm.select(4, 1) == std::nullopt);
    CHECK(wm.access(2) == 2);
    CHECK(wm.count(1) == 2);
    CHECK(wm.check().empty());
}

TEST_CASE("every symbol round-trips through an empty sequence") {
    for (const uint64_t sigma : {2u, 3u, 5u, 37u, 256u}) {
        for (uint64_t c = 1; c <= sigma; ++c) {
            AdaptiveWaveletMatrix wm(sigma);
            wm.insert(1, c);
            REQUIRE(wm.access(1) == c);
            REQUIRE(wm.erase(1) == c);
            REQUIRE(wm.size() == 0);
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(AdaptiveWaveletMatrix(1), std::invalid_argument);
    AdaptiveWaveletMatrix wm(5);
    CHECK_THROWS_AS(wm.insert(1, 0), std::out_of_range);
    CHECK_THROWS_AS(wm.insert(1, 6), std::out_of_range);
    CHECK_THROWS_AS(wm.insert(2, 1), std::out_of_range);
    CHECK_THROWS_AS(wm.erase(1), std::out_of_range);
    CHECK_THROWS_AS(wm.access(1), std::out_of_range);
    CHECK_THROWS_AS(wm.select(1, 0), std::out_of_range);
    CHECK_THROWS_AS(AdaptiveWaveletMatrix::from_symbols(5, {1, 9}), std::out_of_range);
}

TEST_CASE("random sequence over 37 symbols") {
    const auto symbols = adb::test::random_symbols(10000, 37, 300);
    auto wm = AdaptiveWaveletMatrix::from_symbols(37, symbols);
    const NaiveSeq naive(37, symbols);
    std::mt19937_64 rng(301);
    for (int t = 0; t < 1000; ++t) {
        const uint64_t i = adb::test::uniform(rng, 1, naive.size());
        const uint64_t c = adb::test::uniform(rng, 1, 37);
        REQUIRE(wm.access(i) == naive.access(i));
        REQUIRE(wm.rank(c, i) == naive.rank(c, i));
        const uint64_t j = adb::test::uniform(rng, 1, naive.rank(c, naive.size()) + 1);
        REQUIRE(wm.select(c, j) == naive.select(c, j));
    }
    CHECK(wm.symbols() == symbols);
}

TEST_CASE("delete returns what access would have returned") {
    auto wm = AdaptiveWaveletMatrix::from_symbols(256, adb::test::random_symbols(500, 256, 302));
    std::mt19937_64 rng(303);
    while (wm.size() > 0) {
        const uint64_t i = adb::test::uniform(rng, 1, wm.size());
        const uint64_t c = wm.access(i);
        REQUIRE(wm.erase(i) == c);
    }
    CHECK(wm.check().empty());
}

TEST_CASE("each operation touches every level once") {
    auto wm = AdaptiveWaveletMatrix::from_symbols(5, adb::test::random_symbols(1000, 5, 304));
    auto totals = [&] {
        std::vector<std::pair<uint64_t, uint64_t>> out;
        for (unsigned d = 0; d < wm.levels(); ++d) out.emplace_back(wm.level(d).stats().queries_total, wm.level(d).stats().updates_total);
        return out;
    };
    const auto start = totals();
    wm.access(10);
    wm.rank(3, 500);
    wm.select(2, 5);
    wm.insert(7, 4);
    wm.erase(8);
    const auto end = totals();
    for (unsigned d = 0; d < wm.levels(); ++d) {
        CHECK(end[d].first - start[d].first == 3);
        CHECK(end[d].second - start[d].second == 2);
    }
}

TEST_CASE("mixed operations against the oracle") {
    for (const uint64_t sigma : {2u, 5u, 256u}) {
        CAPTURE(sigma);
        auto wm = AdaptiveWaveletMatrix::from_symbols(sigma, adb::test::random_symbols(1000, sigma, sigma));
        NaiveSeq naive(sigma, wm.symbols());
        std::mt19937_64 rng(305 + sigma);
        for (int t = 1; t <= 100000; ++t) {
            const auto roll = rng() % 8;
            const uint64_t c = adb::test::uniform(rng, 1, sigma);
            if (roll == 0 || naive.size() == 0) {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size() + 1);
                wm.insert(i, c);
                naive.insert(i, c);
            } else if (roll == 1) {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size());
                REQUIRE(wm.erase(i) == naive.erase(i));
            } else if (roll < 4) {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size());
                REQUIRE(wm.access(i) == naive.access(i));
            } else if (roll < 6) {
                const uint64_t i = adb::test::uniform(rng, 0, naive.size());
                REQUIRE(wm.rank(c, i) == naive.rank(c, i));
            } else {
                const uint64_t j = adb::test::uniform(rng, 1, wm.count(c) + 1);
                REQUIRE(wm.select(c, j) == naive.select(c, j));
            }
            if (t % 10000 == 0) {
                REQUIRE(wm.symbols() == naive.symbols());
                REQUIRE(adb::test::join(wm.check()) == "");
            }
        }
    }
}

}
