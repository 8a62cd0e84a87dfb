#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "adb/params.hpp"

using adb::compute_params;
using adb::rebuild_due;

TEST_SUITE("params") {

// Hand-evaluated: floor(log2 20) = 4, 400 / 64 = 6.25 -> 7 -> 16 * 7.
TEST_CASE("log_n 20 gives a = 16 and b = 112") {
    const auto p = compute_params(20);
    CHECK(p.a == 16);
    CHECK(p.b == 112);
    CHECK(p.flatten_cap == (uint64_t{1} << 20) / 20);
}

TEST_CASE("log_n 1024 gives a = 32") {
    const auto p = compute_params(1024);
    CHECK(p.a == 32);
    // 1024^2 / (16 * 10) = 6553.6 -> 6554.
    CHECK(p.b == 16 * 6554);
}

TEST_CASE("log_n 4 clamps to the smallest shape") {
    const auto p = compute_params(4);
    CHECK(p.a == 16);
    CHECK(p.b == 16);
    CHECK(p.flatten_cap == 4);
}

TEST_CASE("inputs below the floor behave like log_n 4") {
    CHECK(compute_params(0) == compute_params(4));
    CHECK(compute_params(3) == compute_params(4));
}

TEST_CASE("shape laws over the practical range") {
    for (unsigned log_n = 4; log_n <= 64; ++log_n) {
        CAPTURE(log_n);
        const auto p = compute_params(log_n);
        CHECK(p.a >= 16);
        CHECK(p.a >= static_cast<unsigned>(std::ceil(std::sqrt(static_cast<double>(log_n)))));
        CHECK(p.b >= 16);
        CHECK(p.b % 16 == 0);
        // b is the smallest multiple of 16 with b * floor(log2 log_n) >= log_n^2.
        const uint64_t loglog = std::max(1u, static_cast<unsigned>(std::floor(std::log2(log_n))));
        const uint64_t square = uint64_t{log_n} * log_n;
        CHECK(p.b * loglog >= square);
        CHECK((p.b - 16) * loglog < square);
    }
}

// Below log_n 8 the cap 2^log_n / log_n is smaller than b, so it only holds from 8 on.
TEST_CASE("flatten cap covers a leaf from log_n 8 on") {
    for (unsigned log_n = 8; log_n <= 64; ++log_n) {
        CAPTURE(log_n);
        const auto p = compute_params(log_n);
        CHECK(p.flatten_cap >= p.b);
    }
    CHECK(compute_params(7).flatten_cap < compute_params(7).b);
}

TEST_CASE("ceil log2 with the floor at 16") {
    CHECK(adb::ceil_log2_clamped(0) == 4);
    CHECK(adb::ceil_log2_clamped(16) == 4);
    CHECK(adb::ceil_log2_clamped(17) == 5);
    CHECK(adb::ceil_log2_clamped(uint64_t{1} << 20) == 20);
    CHECK(adb::ceil_log2_clamped((uint64_t{1} << 20) + 1) == 21);
    CHECK(adb::ceil_log2_clamped(~uint64_t{0}) == 64);
}

TEST_CASE("rebuild hysteresis") {
    CHECK(rebuild_due(21, 20));
    CHECK(rebuild_due(18, 20));
    CHECK_FALSE(rebuild_due(19, 20));
    CHECK_FALSE(rebuild_due(20, 20));
    CHECK(rebuild_due(25, 20));
}

TEST_CASE("hysteresis never rebuilds on a one-step oscillation") {
    // Grow to just past a boundary, then oscillate across it.
    unsigned built = 10;
    int rebuilds = 0;
    auto step = [&](unsigned current) {
        if (rebuild_due(current, built)) {
            built = current;
            ++rebuilds;
        }
    };
    step(11);
    CHECK(rebuilds == 1);
    for (int i = 0; i < 100; ++i) step(i % 2 == 0 ? 10 : 11);
    CHECK(rebuilds == 1);
}

}
