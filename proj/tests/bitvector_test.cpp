#include <doctest.h>

#include <random>
#include <stdexcept>

#include "adb/bitvector.hpp"
#include "adb/oracle.hpp"
#include "support.hpp"

using adb::AdaptiveBitvector;
using adb::oracle::NaiveBits;

TEST_SUITE("bitvector") {

TEST_CASE("empty bitvector") {
    AdaptiveBitvector bv;
    CHECK(bv.size() == 0);
    CHECK(bv.rank(true, 0) == 0);
    CHECK(bv.select(true, 1) == std::nullopt);
    CHECK(bv.space_report().payload_bits == 0);
    CHECK(bv.space_report().overhead_ratio == 0.0);
    CHECK(bv.check().empty());
    CHECK(bv.params().log_n == 4);
}

TEST_CASE("queries on 10110") {
    auto bv = AdaptiveBitvector::from_string("10110");
    CHECK(bv.rank(true, 5) == 3);
    // B[1..4] = 1011 holds a single zero.
    CHECK(bv.rank(false, 4) == 1);
    CHECK(bv.rank(false, 5) == 2);
    CHECK(bv.select(true, 4) == std::nullopt);
    CHECK(bv.select(true, 2) == 3);
    CHECK(bv.select(false, 1) == 2);
    CHECK(bv.access(1));
    CHECK_FALSE(bv.access(5));
    CHECK(bv.access_rank(4) == std::pair<bool, uint64_t>{true, 2});
    CHECK(bv.count(true) == 3);
    CHECK(bv.stats().queries_total == 9);
}

TEST_CASE("insert insert delete") {
    AdaptiveBitvector bv;
    bv.insert(1, true);
    bv.insert(2, false);
    CHECK(bv.erase(1));
    CHECK(bv.bits().to_string() == "0");
    CHECK(bv.stats().updates_total == 3);
}

TEST_CASE("update results carry the rank before the position") {
    auto bv = AdaptiveBitvector::from_string("1101");
    CHECK(bv.insert_rank(3, false) == 2);
    CHECK(bv.bits().to_string() == "11001");
    CHECK(bv.erase_rank(5) == std::pair<bool, uint64_t>{true, 2});
    CHECK(bv.write(1, false));
    CHECK(bv.bits().to_string() == "0100");
}

TEST_CASE("range errors name the bound") {
    auto bv = AdaptiveBitvector::from_string("101");
    CHECK_THROWS_AS(bv.access(0), std::out_of_range);
    CHECK_THROWS_AS(bv.access(4), std::out_of_range);
    CHECK_THROWS_AS(bv.rank(true, 4), std::out_of_range);
    CHECK_THROWS_AS(bv.insert(5, true), std::out_of_range);
    CHECK_THROWS_AS(bv.erase(4), std::out_of_range);
    CHECK_THROWS_AS(bv.write(0, true), std::out_of_range);
    CHECK_THROWS_AS(bv.select(true, 0), std::out_of_range);
    CHECK_THROWS_WITH(bv.access(9), "access: position 9 outside [1, 3]");
    AdaptiveBitvector empty;
    CHECK_THROWS_AS(empty.erase(1), std::out_of_range);
    CHECK_THROWS_AS(AdaptiveBitvector::from_bits(adb::PackedUnits(2, 3)), std::invalid_argument);
}

TEST_CASE("million-bit bulk load answers like the oracle") {
    const auto bits = adb::test::random_bits(1000000, 100);
    auto bv = AdaptiveBitvector::from_bits(bits);
    CHECK(bv.check().empty());
    CHECK(bv.params().log_n == 20);
    const NaiveBits naive(bits);
    std::mt19937_64 rng(101);
    for (int t = 0; t < 1000; ++t) {
        const uint64_t i = adb::test::uniform(rng, 1, naive.size());
        switch (t % 4) {
            case 0: REQUIRE(bv.access(i) == naive.access(i)); break;
            case 1: REQUIRE(bv.rank(true, i) == naive.rank(true, i)); break;
            case 2: REQUIRE(bv.rank(false, i) == naive.rank(false, i)); break;
            default: {
                const bool bit = rng() & 1;
                const uint64_t j = adb::test::uniform(rng, 1, naive.count(bit));
                REQUIRE(bv.select(bit, j) == naive.select(bit, j));
            }
        }
    }
}

TEST_CASE("crossing a power of two rebuilds exactly once") {
    auto bv = AdaptiveBitvector::from_bits(adb::test::random_bits(4096, 102));
    REQUIRE(bv.params().log_n == 12);
    bv.insert(100, true);
    CHECK(bv.stats().rebuild_count == 1);
    CHECK(bv.params().log_n == 13);
    CHECK(bv.check().empty());
    // Falling back below the boundary stays inside the hysteresis band.
    bv.erase(100);
    bv.erase(100);
    CHECK(bv.stats().rebuild_count == 1);
    CHECK(bv.params().log_n == 13);
}

TEST_CASE("mixed operations against the oracle") {
    auto bv = AdaptiveBitvector::from_bits(adb::test::random_bits(3000, 103));
    NaiveBits naive(bv.bits());
    std::mt19937_64 rng(104);
    for (int t = 1; t <= 100000; ++t) {
        const auto roll = rng() % 8;
        if (roll == 0 || naive.size() == 0) {
            const uint64_t i = adb::test::uniform(rng, 1, naive.size() + 1);
            const bool bit = rng() & 1;
            REQUIRE(bv.insert_rank(i, bit) == naive.rank(true, i - 1));
            naive.insert(i, bit);
        } else if (roll == 1) {
            const uint64_t i = adb::test::uniform(rng, 1, naive.size());
            REQUIRE(bv.erase(i) == naive.erase(i));
        } else if (roll == 2) {
            const uint64_t i = adb::test::uniform(rng, 1, naive.size());
            const bool bit = rng() & 1;
            REQUIRE(bv.write(i, bit) == naive.write(i, bit));
        } else if (roll < 5) {
            const uint64_t i = adb::test::uniform(rng, 1, naive.size());
            REQUIRE(bv.access(i) == naive.access(i));
        } else if (roll < 7) {
            const bool bit = rng() & 1;
            const uint64_t i = adb::test::uniform(rng, 0, naive.size());
            REQUIRE(bv.rank(bit, i) == naive.rank(bit, i));
        } else {
            const bool bit = rng() & 1;
            const uint64_t j = adb::test::uniform(rng, 1, naive.count(bit) + 1);
            REQUIRE(bv.select(bit, j) == naive.select(bit, j));
        }
        if (t % 1000 == 0) {
            REQUIRE(bv.bits() == naive.packed());
            REQUIRE(adb::test::join(bv.check()) == "");
        }
    }
}

TEST_CASE("frozen copy answers like the live structure") {
    const auto bits = adb::test::random_bits(5000, 105);
    auto bv = AdaptiveBitvector::from_bits(bits);
    const auto frozen = bv.frozen();
    for (uint64_t i = 0; i <= bits.size(); i += 37) CHECK(frozen.rank1(i) == bv.rank(true, i));
}

TEST_CASE("million-bit bulk load passes the structural check") {
    const auto bv = AdaptiveBitvector::from_bits(adb::test::random_bits(1000000, 106));
    CHECK(bv.check().empty());
    const auto space = bv.space_report();
    CHECK(space.payload_bits == 1000000);
    CHECK(space.total_bits == space.payload_bits + space.dynamic_leaf_slack_bits + space.static_index_bits + space.internal_node_bits);
}

TEST_CASE("overhead ratio regression") {
    // Measured value for this exact workload; guards the space accounting
    // and leaf sizing against silent drift.
    constexpr double kGolden = 1.3923;
    auto bv = AdaptiveBitvector::from_bits(adb::test::random_bits(1000000, 107));
    std::mt19937_64 rng(108);
    for (int t = 0; t < 100000; ++t) {
        const uint64_t n = bv.size();
        switch (adb::test::uniform(rng, 0, 3)) {
            case 0: bv.insert(adb::test::uniform(rng, 1, n + 1), rng() & 1); break;
            case 1: bv.erase(adb::test::uniform(rng, 1, n)); break;
            default: bv.rank(true, adb::test::uniform(rng, 0, n)); break;
        }
    }
    const double ratio = bv.space_report().overhead_ratio;
    CHECK(ratio == doctest::Approx(kGolden).epsilon(0.10));
}

}
