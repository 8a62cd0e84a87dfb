#include <doctest.h>

#include <random>
#include <string>

#include "adb/broadword.hpp"
#include "adb/leaf.hpp"
#include "adb/oracle.hpp"
#include "support.hpp"

using adb::DynamicLeaf;
using adb::PackedUnits;
using adb::StaticLeaf;
using adb::oracle::NaiveBits;

namespace {

DynamicLeaf dyn(const char* bits) { return DynamicLeaf(PackedUnits::from_string(bits)); }
StaticLeaf fixed(const char* bits) { return StaticLeaf(PackedUnits::from_string(bits)); }

// Leaf positions are 0-based; the oracle is 1-based.
template <class Leaf>
void expect_all_queries_match(const Leaf& leaf, const NaiveBits& naive) {
    const uint64_t n = naive.size();
    REQUIRE(leaf.size() == n);
    for (uint64_t i = 0; i < n; ++i) REQUIRE(leaf.access(i) == naive.access(i + 1));
    for (uint64_t i = 0; i <= n; ++i) REQUIRE(leaf.rank1(i) == naive.rank(true, i));
    for (const bool bit : {false, true}) {
        for (uint64_t j = 1; j <= n + 1; ++j) {
            const auto got = leaf.select(bit, j);
            const auto want = naive.select(bit, j);
            REQUIRE(got.has_value() == want.has_value());
            if (want) REQUIRE(*got + 1 == *want);
        }
    }
}

}  // namespace

TEST_SUITE("leaf") {

TEST_CASE("dynamic leaf on 10110") {
    const auto leaf = dyn("10110");
    CHECK(leaf.access(0) == 1);
    CHECK(leaf.access(2) == 1);
    CHECK(leaf.rank1(3) == 2);
    CHECK(leaf.rank1(0) == 0);
    CHECK(leaf.select(true, 2) == 2);
    CHECK(leaf.select(false, 1) == 1);
    CHECK(leaf.select(true, 4) == std::nullopt);
    CHECK(leaf.ones() == 3);
}

TEST_CASE("dynamic leaf edits") {
    auto leaf = dyn("101");
    leaf.insert(1, 0);
    CHECK(leaf.units().to_string() == "1001");
    CHECK(leaf.erase(1) == 0);
    CHECK(leaf.units().to_string() == "101");
    CHECK(leaf.write(2, 0) == 1);
    CHECK(leaf.units().to_string() == "100");

    DynamicLeaf empty(1);
    empty.insert(0, 1);
    CHECK(empty.units().to_string() == "1");
}

TEST_CASE("dynamic leaf on a random 500-bit payload") {
    const auto bits = adb::test::random_bits(500, 42);
    const DynamicLeaf leaf(bits);
    const NaiveBits naive(bits);
    CHECK(leaf.access(316) == naive.access(317));
    CHECK(leaf.rank1(499) == naive.rank(true, 499));
    expect_all_queries_match(leaf, naive);
}

TEST_CASE("dynamic leaf random edits against the oracle") {
    std::mt19937_64 rng(9);
    DynamicLeaf leaf(adb::test::random_bits(500, 1));
    NaiveBits naive(leaf.units());
    leaf.insert(249, 1);
    naive.insert(250, true);
    REQUIRE(leaf.units() == naive.packed());
    for (int step = 0; step < 3000; ++step) {
        const auto op = rng() % 3;
        if (op == 0 || naive.size() == 0) {
            const uint64_t i = adb::test::uniform(rng, 0, naive.size());
            const bool bit = rng() & 1;
            leaf.insert(i, bit);
            naive.insert(i + 1, bit);
        } else if (op == 1) {
            const uint64_t i = adb::test::uniform(rng, 0, naive.size() - 1);
            REQUIRE(leaf.erase(i) == naive.erase(i + 1));
        } else {
            const uint64_t i = adb::test::uniform(rng, 0, naive.size() - 1);
            const bool bit = rng() & 1;
            REQUIRE(leaf.write(i, bit) == naive.write(i + 1, bit));
        }
        REQUIRE(leaf.units().storage_words() == adb::broadword::words_for(leaf.size()));
    }
    expect_all_queries_match(leaf, naive);
}

TEST_CASE("static leaf small cases") {
    const auto ones = fixed("1111");
    CHECK(ones.ones() == 4);
    CHECK(ones.rank1(4) == 4);

    const auto leaf = fixed("10110");
    CHECK(leaf.rank1(3) == 2);
    CHECK(leaf.select(false, 1) == 1);
    CHECK(leaf.consistent());

    const StaticLeaf empty(PackedUnits(1));
    CHECK(empty.ones() == 0);
    CHECK(empty.rank1(0) == 0);
    CHECK(empty.select(true, 1) == std::nullopt);
}

TEST_CASE("all-zero static leaf has no one to select") {
    const StaticLeaf zeros(PackedUnits(1, 1000));
    CHECK(zeros.ones() == 0);
    for (uint64_t j = 1; j <= 1001; ++j) REQUIRE(zeros.select(true, j) == std::nullopt);
    CHECK(zeros.select(false, 1000) == 999);
    CHECK(zeros.select(false, 1001) == std::nullopt);
    // Directory of 2 superblocks plus sentinel, two select0 samples, no select1 samples.
    CHECK(zeros.index_bits() == 64 * (6 + 2));
}

TEST_CASE("static leaf on a random 100000-bit payload") {
    const auto bits = adb::test::random_bits(100000, 77);
    const StaticLeaf leaf(bits);
    const NaiveBits naive(bits);
    for (const uint64_t i : {0u, 1u, 17u, 100000u}) CHECK(leaf.rank1(i) == naive.rank(true, i));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; ++t) {
        const uint64_t i = adb::test::uniform(rng, 1, naive.size());
        REQUIRE(leaf.access(i - 1) == naive.access(i));
        REQUIRE(leaf.rank1(i) == naive.rank(true, i));
        const bool bit = rng() & 1;
        const uint64_t j = adb::test::uniform(rng, 1, naive.count(bit));
        REQUIRE(*leaf.select(bit, j) + 1 == *naive.select(bit, j));
    }
    CHECK(leaf.consistent());
}

TEST_CASE("static and dynamic leaves agree at several densities") {
    for (const double density : {0.0, 0.01, 0.5, 0.99, 1.0}) {
        for (const uint64_t n : {1u, 63u, 64u, 65u, 511u, 512u, 513u, 4096u, 5000u}) {
            CAPTURE(density);
            CAPTURE(n);
            const auto bits = adb::test::random_bits(n, n * 31 + 7, density);
            const NaiveBits naive(bits);
            expect_all_queries_match(StaticLeaf(bits), naive);
            expect_all_queries_match(DynamicLeaf(bits), naive);
        }
    }
}

TEST_CASE("every payload up to 12 bits") {
    for (unsigned len = 0; len <= 12; ++len) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << len); ++mask) {
            PackedUnits bits(1, len);
            for (unsigned i = 0; i < len; ++i) bits.set(i, (mask >> i) & 1);
            const NaiveBits naive(bits);
            const StaticLeaf st(bits);
            REQUIRE(st.consistent());
            expect_all_queries_match(st, naive);
            expect_all_queries_match(DynamicLeaf(bits), naive);
        }
    }
}

TEST_CASE("cell leaves store and overwrite values") {
    PackedUnits cells(8);
    for (const uint64_t v : {5u, 7u, 9u}) cells.push_back(v);
    StaticLeaf leaf(cells);
    CHECK_FALSE(leaf.indexed());
    CHECK(leaf.access(1) == 7);
    CHECK(leaf.write(1, 200) == 7);
    CHECK(leaf.access(1) == 200);
    CHECK(leaf.index_bits() == 0);
}

TEST_CASE("rank and select are inverse on random payloads") {
    const auto bits = adb::test::random_bits(20000, 5, 0.3);
    const StaticLeaf leaf(bits);
    for (uint64_t j = 1; j <= leaf.ones(); j += 7) {
        const uint64_t p = *leaf.select(true, j);
        REQUIRE(leaf.rank1(p + 1) == j);
        REQUIRE(leaf.access(p) == 1);
    }
    for (uint64_t j = 1; j <= leaf.size() - leaf.ones(); j += 11) {
        const uint64_t p = *leaf.select(false, j);
        REQUIRE(p + 1 - leaf.rank1(p + 1) == j);
    }
}

}
