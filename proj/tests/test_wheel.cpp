#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "sextic/verify.hpp"
#include "sextic/wheel.hpp"

using namespace sextic;

TEST_CASE("index_to_value on both series") {
    CHECK(index_to_value({Series::S1, 1}) == 5);
    CHECK(index_to_value({Series::S2, 1}) == 7);
    CHECK(index_to_value({Series::S1, 12}) == 71);
    CHECK(index_to_value({Series::S2, 12}) == 73);
    CHECK_THROWS_AS(index_to_value({Series::S1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(index_to_value({Series::S2, ~u64(0) / 2}), std::overflow_error);
}

TEST_CASE("classify inverts index_to_value and rejects off-wheel values") {
    CHECK(classify(431) == WheelIndex{Series::S1, 72});
    CHECK(classify(7) == WheelIndex{Series::S2, 1});
    CHECK(classify(5) == WheelIndex{Series::S1, 1});
    CHECK(!classify(12).has_value());
    CHECK(!classify(1).has_value()); // series start at n = 1
    CHECK(!classify(2).has_value());
    CHECK(!classify(3).has_value());
    CHECK(!classify(4).has_value());
    CHECK_THROWS_AS(classify(0), std::invalid_argument);
}

TEST_CASE("classify round-trips every index up to 10^6") {
    for (u64 n = 1; n <= 1000000; ++n) {
        CHECK(classify(6 * n - 1) == WheelIndex{Series::S1, n});
        CHECK(classify(6 * n + 1) == WheelIndex{Series::S2, n});
    }
}

TEST_CASE("composite_index unit products") {
    CompositeIndex c1 = composite_index(FactorPattern::minus_minus, 1, 1);
    CHECK(c1.index == WheelIndex{Series::S2, 4});
    CHECK(index_to_value(c1.index) == 25);

    CompositeIndex c2 = composite_index(FactorPattern::plus_plus, 1, 1);
    CHECK(c2.index == WheelIndex{Series::S2, 8});
    CHECK(index_to_value(c2.index) == 49);

    CompositeIndex c3 = composite_index(FactorPattern::plus_minus, 1, 1);
    CHECK(c3.index == WheelIndex{Series::S1, 6});
    CHECK(index_to_value(c3.index) == 35);

    CHECK_THROWS_AS(composite_index(FactorPattern::plus_plus, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(composite_index(FactorPattern::plus_plus, u64(1) << 40, u64(1) << 40),
                    std::overflow_error);
}

TEST_CASE("composite index value equals the literal factor product") {
    for (FactorPattern pattern :
         {FactorPattern::minus_minus, FactorPattern::plus_plus, FactorPattern::plus_minus}) {
        for (u64 a = 1; a <= 100; ++a) {
            for (u64 b = 1; b <= 100; ++b) {
                CompositeIndex c = composite_index(pattern, a, b);
                u64 product = pattern_factor_a(pattern, a) * pattern_factor_b(pattern, b);
                CHECK(index_to_value(c.index) == product);
                CHECK(c.index.series == pattern_series(pattern));
            }
        }
    }
}

TEST_CASE("composite index n matches the bilinear forms") {
    for (u64 a = 1; a <= 40; ++a) {
        for (u64 b = 1; b <= 40; ++b) {
            CHECK(composite_index(FactorPattern::minus_minus, a, b).index.n == 6 * a * b - a - b);
            CHECK(composite_index(FactorPattern::plus_plus, a, b).index.n == 6 * a * b + a + b);
            CHECK(composite_index(FactorPattern::plus_minus, a, b).index.n == 6 * a * b - a + b);
        }
    }
}

TEST_CASE("the mixed pattern and its mirror enumerate the same n-set") {
    // {6ab - a + b} and {6ab + a - b} over a, b >= 1, compared up to 10^4.
    const u64 n_cap = 10000;
    std::set<u64> direct, mirrored;
    for (u64 a = 1; 5 * a + 1 <= n_cap; ++a)
        for (u64 b = 1; b * (6 * a + 1) - a <= n_cap; ++b)
            direct.insert(b * (6 * a + 1) - a); // 6ab - a + b
    for (u64 a = 1; 7 * a - 1 <= n_cap; ++a)
        for (u64 b = 1; b * (6 * a - 1) + a <= n_cap; ++b)
            mirrored.insert(b * (6 * a - 1) + a); // 6ab + a - b
    CHECK(!direct.empty());
    CHECK(direct == mirrored);
}

TEST_CASE("every composite on the wheel is reachable from some factor pair") {
    // Cross-checked with trial-division factoring.
    for (u64 v = 5; v <= 100000; v += (v % 6 == 5 ? 2 : 4)) {
        std::vector<u64> factors = factor_small(v);
        if (factors.size() < 2) continue; // prime
        u64 f = factors.front();
        u64 cof = v / f;
        auto fi = classify(f);
        auto ci = classify(cof);
        REQUIRE(fi.has_value());
        REQUIRE(ci.has_value());
        FactorPattern pattern;
        u64 a, b;
        if (fi->series == Series::S1 && ci->series == Series::S1) {
            pattern = FactorPattern::minus_minus;
            a = fi->n;
            b = ci->n;
        } else if (fi->series == Series::S2 && ci->series == Series::S2) {
            pattern = FactorPattern::plus_plus;
            a = fi->n;
            b = ci->n;
        } else if (fi->series == Series::S2) {
            pattern = FactorPattern::plus_minus;
            a = fi->n;
            b = ci->n;
        } else {
            pattern = FactorPattern::plus_minus;
            a = ci->n;
            b = fi->n;
        }
        CompositeIndex c = composite_index(pattern, a, b);
        CHECK(index_to_value(c.index) == v);
    }
}
