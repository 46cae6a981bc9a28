#include <doctest.h>

#include <limits>
#include <random>

#include "sextic/arith.hpp"

using namespace sextic;

TEST_CASE("checked arithmetic rejects overflow and passes everything else") {
    CHECK(checked_add(1, 2) == 3);
    CHECK(checked_mul(6, 7) == 42);
    CHECK(checked_pow(6, 2) == 36);
    CHECK(checked_pow(6, 0) == 1);
    CHECK(checked_pow(2, 63) == u64(1) << 63);

    u64 max = std::numeric_limits<u64>::max();
    CHECK(checked_add(max - 1, 1) == max);
    CHECK_THROWS_AS(checked_add(max, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(u64(1) << 32, u64(1) << 32), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(6, 25), std::overflow_error);
    CHECK(checked_pow(6, 24) == 4738381338321616896ull);
}

TEST_CASE("pow_mod matches naive repeated multiplication") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        u64 m = rng() % 1000 + 2;
        u64 base = rng() % 1000;
        u64 exp = rng() % 30;
        u64 naive = 1;
        for (u64 k = 0; k < exp; ++k) naive = naive * base % m;
        CHECK(pow_mod(base, exp, m) == naive);
    }
}

TEST_CASE("pow_mod survives moduli near 2^64") {
    u64 m = 0xfffffffffffffffbull;
    CHECK(pow_mod(m - 1, 2, m) == 1); // (-1)^2
    CHECK(mul_mod(m - 1, m - 1, m) == 1);
}

TEST_CASE("isqrt is exact at and around squares") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(isqrt(26) == 5);
    u64 max = std::numeric_limits<u64>::max();
    CHECK(isqrt(max) == 4294967295ull);
    for (u64 r : {u64(3), u64(1000003), u64(4294967295ull)}) {
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r - 1) == r - 1);
    }
}
