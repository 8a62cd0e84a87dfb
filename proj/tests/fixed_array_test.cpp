#include <doctest.h>

#include <random>
#include <stdexcept>

#include "adb/fixed_array.hpp"
#include "adb/oracle.hpp"
#include "support.hpp"

using adb::AdaptiveArray;
using adb::oracle::NaiveCells;

TEST_SUITE("fixed_array") {

TEST_CASE("read and no-op write on 5 7 9") {
    auto array = AdaptiveArray::from_values(8, {5, 7, 9});
    CHECK(array.read(2) == 7);
    CHECK(array.write(2, 7) == 7);
    CHECK(array.values() == std::vector<uint64_t>{5, 7, 9});
    CHECK(array.stats().queries_total == 2);
    CHECK(array.stats().updates_total == 0);
}

TEST_CASE("insert into empty then delete") {
    AdaptiveArray array(31);
    array.insert(1, 123456789);
    CHECK(array.read(1) == 123456789);
    CHECK(array.erase(1) == 123456789);
    CHECK(array.size() == 0);
    CHECK(array.check().empty());
}

TEST_CASE("range and width errors") {
    auto array = AdaptiveArray::from_values(4, {1, 2});
    CHECK_THROWS_AS(array.read(0), std::out_of_range);
    CHECK_THROWS_AS(array.read(3), std::out_of_range);
    CHECK_THROWS_AS(array.insert(4, 1), std::out_of_range);
    CHECK_THROWS_AS(array.write(1, 16), std::invalid_argument);
    CHECK_THROWS_AS(array.insert(1, 99), std::invalid_argument);
    CHECK_THROWS_AS(AdaptiveArray(0), std::invalid_argument);
    CHECK_THROWS_AS(AdaptiveArray(65), std::invalid_argument);
    CHECK_THROWS_AS(AdaptiveArray::from_values(3, {8}), std::invalid_argument);
    AdaptiveArray wide(64);
    wide.insert(1, ~uint64_t{0});
    CHECK(wide.read(1) == ~uint64_t{0});
}

TEST_CASE("splitting a static array leaf preserves every read") {
    const auto values = adb::test::random_cells(10000, 12, 200);
    auto array = AdaptiveArray::from_values(12, values);
    // Enough passes for the root to flatten.
    for (int pass = 0; pass < 3; ++pass) {
        for (uint64_t i = 1; i <= values.size(); ++i) REQUIRE(array.read(i) == values[i - 1]);
    }
    REQUIRE(array.stats().flatten_count > 0);
    array.insert(5000, 1);
    CHECK(array.stats().split_count > 0);
    CHECK(array.check().empty());
    auto expected = values;
    expected.insert(expected.begin() + 4999, 1);
    for (uint64_t i = 1; i <= expected.size(); ++i) REQUIRE(array.read(i) == expected[i - 1]);
}

TEST_CASE("mixed operations against the oracle") {
    for (const unsigned width : {1u, 8u, 31u, 64u}) {
        CAPTURE(width);
        auto array = AdaptiveArray::from_values(width, adb::test::random_cells(2000, width, width));
        NaiveCells naive(width, array.values());
        std::mt19937_64 rng(201 + width);
        const uint64_t mask = width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
        for (int t = 1; t <= 100000; ++t) {
            const auto roll = rng() % 8;
            if (roll == 0 || naive.size() == 0) {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size() + 1);
                const uint64_t v = rng() & mask;
                array.insert(i, v);
                naive.insert(i, v);
            } else if (roll == 1) {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size());
                REQUIRE(array.erase(i) == naive.erase(i));
            } else if (roll < 5) {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size());
                const uint64_t v = rng() & mask;
                REQUIRE(array.write(i, v) == naive.write(i, v));
            } else {
                const uint64_t i = adb::test::uniform(rng, 1, naive.size());
                REQUIRE(array.read(i) == naive.read(i));
            }
            if (t % 5000 == 0) {
                REQUIRE(array.values() == naive.values());
                REQUIRE(adb::test::join(array.check()) == "");
            }
        }
    }
}

TEST_CASE("leaf capacity in cells") {
    const auto p = adb::compute_params(20);
    CHECK(adb::array_geometry(p, 1).leaf_cap == 64 * 112 / 20);
    CHECK(adb::array_geometry(p, 8).leaf_cap == 64 * 112 / 20 / 8);
    CHECK(adb::array_geometry(p, 64).leaf_cap == 5);
    CHECK(adb::array_geometry(adb::compute_params(4), 64).leaf_cap == 4);
}

}
