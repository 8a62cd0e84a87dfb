#include <doctest.h>

#include <stdexcept>

#include "adb/oracle.hpp"
#include "support.hpp"

using adb::oracle::NaiveBits;
using adb::oracle::NaiveCells;
using adb::oracle::NaiveSeq;

TEST_SUITE("oracle") {

TEST_CASE("naive bits on 10110") {
    NaiveBits bits("10110");
    CHECK(bits.rank(true, 3) == 2);
    CHECK(bits.select(true, 3) == 4);
    CHECK(bits.select(true, 4) == std::nullopt);
    CHECK(bits.select(false, 3) == std::nullopt);
    bits.insert(6, true);
    CHECK(bits.to_string() == "101101");
    CHECK(bits.packed().to_string() == "101101");
    CHECK_THROWS_AS(bits.access(0), std::out_of_range);
    CHECK_THROWS_AS(bits.insert(8, true), std::out_of_range);
    CHECK_THROWS_AS(bits.select(true, 0), std::out_of_range);
}

TEST_CASE("rank and select are dual on random payloads") {
    for (const double density : {0.05, 0.5, 0.95}) {
        const NaiveBits bits(adb::test::random_bits(3000, 400, density));
        for (const bool bit : {false, true}) {
            for (uint64_t j = 1; j <= bits.count(bit); ++j) {
                const uint64_t p = *bits.select(bit, j);
                REQUIRE(bits.rank(bit, p) == j);
                REQUIRE(bits.rank(bit, p - 1) == j - 1);
            }
            for (uint64_t i = 1; i <= bits.size(); ++i) {
                if (bits.access(i) == bit) REQUIRE(*bits.select(bit, bits.rank(bit, i)) == i);
            }
        }
    }
}

TEST_CASE("naive cells check widths") {
    NaiveCells cells(8, {5, 7, 9});
    CHECK(cells.read(2) == 7);
    CHECK(cells.write(2, 8) == 7);
    CHECK_THROWS_AS(cells.write(1, 256), std::invalid_argument);
    CHECK_THROWS_AS(NaiveCells(0), std::invalid_argument);
    CHECK_THROWS_AS(cells.read(4), std::out_of_range);
}

TEST_CASE("naive sequence") {
    NaiveSeq seq(4, {1, 2, 1, 3});
    CHECK(seq.rank(1, 3) == 2);
    CHECK(seq.select(3, 1) == 4);
    CHECK(seq.select(4, 1) == std::nullopt);
    CHECK(seq.erase(2) == 2);
    CHECK_THROWS_AS(seq.insert(1, 5), std::out_of_range);
    CHECK_THROWS_AS(NaiveSeq(1), std::invalid_argument);
}

}
