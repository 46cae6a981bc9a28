#pragma once

/**
 * @file wheel.hpp
 * @brief The mod-6 wheel coordinate system.
 *
 * Every integer >= 5 that is coprime to 6 is exactly one of 6n-1 or 6n+1
 * with n >= 1. S1 is the 6n-1 series, S2 the 6n+1 series; all primes > 3
 * live in one of the two. A product of two wheel numbers lands back on the
 * wheel, and its index n is a bilinear function of the factor indices:
 *
 *   (6a-1)(6b-1) = 6(6ab - a - b) + 1   -> S2, n = 6ab - a - b
 *   (6a+1)(6b+1) = 6(6ab + a + b) + 1   -> S2, n = 6ab + a + b
 *   (6a+1)(6b-1) = 6(6ab - a + b) - 1   -> S1, n = 6ab - a + b
 *
 * The mixed pattern also admits the mirrored form n = 6ab + a - b (swap
 * which factor carries the +1); both enumerate the same n-set, so only
 * the first is given a constructor and the sieve marks both orientations.
 */

#include <optional>

#include "sextic/arith.hpp"

namespace sextic {

enum class Series : unsigned char {
    S1, // value 6n - 1
    S2, // value 6n + 1
};

struct WheelIndex {
    Series series;
    u64 n; // >= 1

    friend bool operator==(const WheelIndex&, const WheelIndex&) = default;
};

/// Which 6k+-1 shape the two factors of a composite take.
enum class FactorPattern : unsigned char {
    minus_minus, // (6a-1)(6b-1)
    plus_plus,   // (6a+1)(6b+1)
    plus_minus,  // (6a+1)(6b-1)
};

/// A wheel position known to be composite, with the factor indices that
/// witness it: value(index) == first_factor * second_factor.
struct CompositeIndex {
    WheelIndex index;
    u64 factor_a;
    u64 factor_b;
    FactorPattern pattern;
};

/// 6n-1 or 6n+1. Requires n >= 1; throws std::overflow_error when the
/// value would not fit 64 bits.
u64 index_to_value(WheelIndex idx);

/// Inverse of index_to_value. Returns nullopt for inputs off the wheel
/// (divisible by 2 or 3, or one of 1..4). Rejects v == 0.
std::optional<WheelIndex> classify(u64 v);

/// Series the product of a pattern lands in.
Series pattern_series(FactorPattern pattern);

/// Wheel values of the two factors for (pattern, a, b): {6a∓1, 6b∓1}.
u64 pattern_factor_a(FactorPattern pattern, u64 a);
u64 pattern_factor_b(FactorPattern pattern, u64 b);

/// Builds the composite index for factors (a, b) of the given pattern.
/// Requires a, b >= 1; throws std::overflow_error when the product
/// exceeds 64 bits.
CompositeIndex composite_index(FactorPattern pattern, u64 a, u64 b);

} // namespace sextic
