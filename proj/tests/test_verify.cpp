#include <doctest.h>

#include <numeric>

#include "sextic/verify.hpp"

using namespace sextic;

namespace {

// Independent check used only by this file.
bool trial_division_is_prime(u64 v) {
    if (v < 2) return false;
    for (u64 d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("is_prime_ref worked values") {
    CHECK(is_prime_ref(71));
    CHECK(!is_prime_ref(287)); // 7 * 41
    CHECK(!is_prime_ref(1));
    CHECK(!is_prime_ref(0));
    CHECK(is_prime_ref(2));
    CHECK(is_prime_ref(3));
    CHECK(!is_prime_ref(215));
    CHECK(is_prime_ref(719));
    CHECK(is_prime_ref(2591));
    CHECK(!is_prime_ref(467 * 467));
    CHECK(is_prime_ref(18446744073709551557ull)); // largest 64-bit prime
    CHECK(!is_prime_ref(18446744073709551615ull));
    // Strong-pseudoprime stress values for small base sets.
    CHECK(!is_prime_ref(3215031751ull));
    CHECK(!is_prime_ref(3825123056546413051ull));
}

TEST_CASE("is_prime_ref agrees with trial division exhaustively to 10^6") {
    for (u64 v = 0; v <= 1000000; ++v)
        REQUIRE(is_prime_ref(v) == trial_division_is_prime(v));
}

TEST_CASE("factor_small worked values and contract") {
    CHECK(factor_small(215) == std::vector<u64>{5, 43});
    CHECK(factor_small(539) == std::vector<u64>{7, 7, 11});
    CHECK(factor_small(719) == std::vector<u64>{719});
    CHECK(factor_small(2) == std::vector<u64>{2});
    CHECK(factor_small(1024) == std::vector<u64>(10, 2));
    CHECK_THROWS_AS(factor_small(1), std::invalid_argument);
    CHECK_THROWS_AS(factor_small(factor_small_budget + 1), std::invalid_argument);

    for (u64 v = 2; v <= 20000; ++v) {
        std::vector<u64> factors = factor_small(v);
        u64 product = 1;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            CHECK(is_prime_ref(factors[k]));
            if (k > 0) CHECK(factors[k - 1] <= factors[k]);
            product *= factors[k];
        }
        CHECK(product == v);
    }
}

TEST_CASE("sound engine never disagrees with the oracle on the tested grids") {
    SearchReport a = search_counterexamples({1}, 14, 1000, Engine::sound);
    CHECK(a.disagreements.empty());
    CHECK(a.skipped.empty());

    SearchReport b = search_counterexamples({3}, 2, 100, Engine::sound);
    CHECK(b.disagreements.empty());
}

TEST_CASE("literal engine over the small-N window, N=8 skipped") {
    SearchReport report = search_counterexamples({1, 3}, 2, 13, Engine::paper_literal);
    CHECK(report.disagreements.empty());
    REQUIRE(report.skipped.size() == 2); // N = 8 for each m
    CHECK(report.skipped[0].m == 1);
    CHECK(report.skipped[0].N == 8);
    CHECK(report.skipped[1].m == 3);
    CHECK(report.skipped[1].N == 8);
}

TEST_CASE("grid points whose P overflows are skipped and reported") {
    // 6^24 fits 64 bits but 6^24 * 4 does not, so the m=23 half of this
    // grid overflows while the m=1 half evaluates normally.
    SearchReport report = search_counterexamples({1, 23}, 4, 5, Engine::sound);
    CHECK(report.disagreements.empty());
    REQUIRE(report.skipped.size() == 2);
    CHECK(report.skipped[0].m == 23);
    CHECK(report.skipped[0].N == 4);
    CHECK(report.skipped[1].m == 23);
    CHECK(report.skipped[1].N == 5);
    for (const SkippedPoint& s : report.skipped) CHECK(s.reason == "P exceeds 64-bit range");
}

TEST_CASE("literal engine small-N window for higher odd m (report, not assertion)") {
    SearchReport report = search_counterexamples({5, 7}, 2, 13, Engine::paper_literal);
    WARN(report.disagreements.empty());
}

TEST_CASE("search input validation") {
    CHECK_THROWS_AS(search_counterexamples({}, 2, 10, Engine::sound), std::invalid_argument);
    CHECK_THROWS_AS(search_counterexamples({0}, 2, 10, Engine::sound), std::invalid_argument);
    CHECK_THROWS_AS(search_counterexamples({1}, 0, 10, Engine::sound), std::invalid_argument);
    CHECK_THROWS_AS(search_counterexamples({1}, 5, 4, Engine::sound), std::invalid_argument);
    CHECK_THROWS_AS(search_counterexamples({2}, 2, 10, Engine::paper_literal),
                    std::invalid_argument);
}

TEST_CASE("search results are deterministic across thread counts") {
    SearchReport one = search_counterexamples({1}, 2, 400, Engine::paper_literal, 1);
    SearchReport four = search_counterexamples({1}, 2, 400, Engine::paper_literal, 4);
    REQUIRE(one.disagreements.size() == four.disagreements.size());
    for (std::size_t k = 0; k < one.disagreements.size(); ++k) {
        CHECK(one.disagreements[k].N == four.disagreements[k].N);
        CHECK(one.disagreements[k].P == four.disagreements[k].P);
    }
    CHECK(one.skipped.size() == four.skipped.size());
}
