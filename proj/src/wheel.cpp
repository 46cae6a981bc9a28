#include "sextic/wheel.hpp"

#include <stdexcept>

namespace sextic {

u64 index_to_value(WheelIndex idx) {
    if (idx.n == 0) throw std::invalid_argument("wheel index n must be >= 1");
    u64 six_n = checked_mul(6, idx.n);
    return idx.series == Series::S1 ? six_n - 1 : checked_add(six_n, 1);
}

std::optional<WheelIndex> classify(u64 v) {
    if (v == 0) throw std::invalid_argument("classify: v must be >= 1");
    switch (v % 6) {
    case 5:
        return WheelIndex{Series::S1, (v + 1) / 6};
    case 1:
        if (v == 1) return std::nullopt; // series start at n = 1, value 7
        return WheelIndex{Series::S2, (v - 1) / 6};
    default:
        return std::nullopt;
    }
}

Series pattern_series(FactorPattern pattern) {
    return pattern == FactorPattern::plus_minus ? Series::S1 : Series::S2;
}

u64 pattern_factor_a(FactorPattern pattern, u64 a) {
    u64 six_a = checked_mul(6, a);
    return pattern == FactorPattern::minus_minus ? six_a - 1 : checked_add(six_a, 1);
}

u64 pattern_factor_b(FactorPattern pattern, u64 b) {
    u64 six_b = checked_mul(6, b);
    return pattern == FactorPattern::plus_plus ? checked_add(six_b, 1) : six_b - 1;
}

CompositeIndex composite_index(FactorPattern pattern, u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("factor indices must be >= 1");
    u64 value = checked_mul(pattern_factor_a(pattern, a), pattern_factor_b(pattern, b));
    Series series = pattern_series(pattern);
    // n recovered from the product; equal to the bilinear form for the pattern.
    u64 n = series == Series::S1 ? (value + 1) / 6 : (value - 1) / 6;
    return CompositeIndex{WheelIndex{series, n}, a, b, pattern};
}

} // namespace sextic
