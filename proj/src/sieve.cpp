#include "sextic/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

u64 ceil_div(u64 x, u64 y) {
    return x / y + (x % y != 0);
}

void validate_range(SieveRange range) {
    if (range.lo == 0) throw std::invalid_argument("sieve range must start at 1 or above");
    if (range.lo > range.hi) throw std::invalid_argument("sieve range is empty (lo > hi)");
}

/// Visits (pattern, factor_a, factor_b, n) for every composite index of
/// `series` with n in [n_lo, n_hi]. factor_a always names the 6k+1 side
/// of the mixed pattern, so the mirrored orientation swaps the pair.
template <typename Visit>
void enumerate_window(Series series, u64 n_lo, u64 n_hi, Visit&& visit) {
    if (n_lo == 0) n_lo = 1;
    if (n_lo > n_hi) return;
    if (series == Series::S2) {
        // (6a-1)(6b-1): n = (6a-1)b - a, b >= a; first hit at b = a is 6a^2 - 2a.
        for (u64 a = 1; u128(6) * a * a - 2 * a <= n_hi; ++a) {
            u64 step = 6 * a - 1;
            u64 b = std::max(a, ceil_div(n_lo + a, step));
            for (u64 n = step * b - a; n <= n_hi; n += step, ++b)
                visit(FactorPattern::minus_minus, a, b, n);
        }
        // (6a+1)(6b+1): n = (6a+1)b + a, b >= a; first hit 6a^2 + 2a.
        for (u64 a = 1; u128(6) * a * a + 2 * a <= n_hi; ++a) {
            u64 step = 6 * a + 1;
            u64 b = std::max(a, n_lo > a ? ceil_div(n_lo - a, step) : u64(1));
            if (n_hi < a) break;
            for (u64 n = step * b + a; n <= n_hi; n += step, ++b)
                visit(FactorPattern::plus_plus, a, b, n);
        }
    } else {
        // (6a+1)(6b-1): n = (6a+1)b - a, b >= a; first hit 6a^2.
        for (u64 a = 1; u128(6) * a * a <= n_hi; ++a) {
            u64 step = 6 * a + 1;
            u64 b = std::max(a, ceil_div(n_lo + a, step));
            for (u64 n = step * b - a; n <= n_hi; n += step, ++b)
                visit(FactorPattern::plus_minus, a, b, n);
        }
        // Mirrored orientation (6b+1)(6a-1): n = (6a-1)b + a, b >= a+1
        // (b = a would repeat the square already visited above).
        for (u64 a = 1; u128(6) * a * a + 6 * a - 1 <= n_hi; ++a) {
            u64 step = 6 * a - 1;
            u64 b = std::max(a + 1, n_lo > a ? ceil_div(n_lo - a, step) : u64(1));
            if (n_hi < a) break;
            for (u64 n = step * b + a; n <= n_hi; n += step, ++b)
                visit(FactorPattern::plus_minus, b, a, n);
        }
    }
}

} // namespace

void for_each_composite_index(Series series, u64 n_lo, u64 n_hi,
                              const std::function<void(const CompositeIndex&)>& visit) {
    enumerate_window(series, n_lo, n_hi, [&](FactorPattern pattern, u64 fa, u64 fb, u64 n) {
        visit(CompositeIndex{WheelIndex{series, n}, fa, fb, pattern});
    });
}

SieveResult wheel_sieve(SieveRange range, const SieveConfig& config) {
    validate_range(range);
    if (config.segment_indices == 0) throw std::invalid_argument("segment_indices must be >= 1");
    if (config.segment_indices / 4 > config.memory_budget_bytes)
        throw capacity_error("wheel sieve segment exceeds the memory budget");

    SieveResult out;
    out.stats.algorithm = SieveAlgorithm::wheel6;

    for (u64 small : {u64(2), u64(3)}) {
        if (range.lo <= small && small <= range.hi) {
            ++out.stats.candidates_considered;
            out.primes.push_back(small);
            ++out.stats.primes_found;
        }
    }

    // Largest n with 6n-1 <= hi; written to survive hi == UINT64_MAX.
    u64 n_end = range.hi >= 5 ? range.hi / 6 + (range.hi % 6 == 5 ? 1 : 0) : 0;
    if (n_end == 0) return out;
    u64 n_start = range.lo > 7 ? (range.lo - 1) / 6 : 1;

    std::vector<bool> marked_s1, marked_s2;
    for (u64 seg_lo = n_start; seg_lo <= n_end;) {
        u64 seg_len = std::min(config.segment_indices, n_end - seg_lo + 1);
        u64 seg_hi = seg_lo + seg_len - 1;
        marked_s1.assign(seg_len, false);
        marked_s2.assign(seg_len, false);

        enumerate_window(Series::S1, seg_lo, seg_hi, [&](FactorPattern, u64, u64, u64 n) {
            marked_s1[n - seg_lo] = true;
            ++out.stats.mark_operations;
        });
        enumerate_window(Series::S2, seg_lo, seg_hi, [&](FactorPattern, u64, u64, u64 n) {
            marked_s2[n - seg_lo] = true;
            ++out.stats.mark_operations;
        });

        for (u64 n = seg_lo; n <= seg_hi; ++n) {
            u64 v1 = 6 * n - 1;
            if (v1 >= range.lo && v1 <= range.hi) {
                ++out.stats.candidates_considered;
                if (!marked_s1[n - seg_lo]) out.primes.push_back(v1);
            }
            u64 v2 = 6 * n + 1;
            if (v2 >= range.lo && v2 <= range.hi) {
                ++out.stats.candidates_considered;
                if (!marked_s2[n - seg_lo]) out.primes.push_back(v2);
            }
        }

        if (seg_hi == n_end) break;
        seg_lo = seg_hi + 1;
    }

    out.stats.primes_found = out.primes.size();
    return out;
}

SieveResult eratosthenes(SieveRange range, const SieveConfig& config) {
    validate_range(range);
    if (config.segment_values == 0) throw std::invalid_argument("segment_values must be >= 1");

    u64 root = isqrt(range.hi);
    // Working memory: the base bitmap, a generous bound on the base prime
    // list, and one segment bitmap.
    u64 base_bitmap_bytes = root / 8 + 1;
    u64 base_primes_bytes = (root >= 33 ? root / 3 : 11) * 8;
    u64 segment_bytes = config.segment_values / 8 + 1;
    if (base_bitmap_bytes + base_primes_bytes + segment_bytes > config.memory_budget_bytes)
        throw capacity_error("range requires more working memory than the configured budget");

    SieveResult out;
    out.stats.algorithm = SieveAlgorithm::eratosthenes;

    std::vector<bool> base_composite(root + 1, false);
    std::vector<u64> base_primes;
    for (u64 i = 2; i <= root; ++i) {
        if (base_composite[i]) continue;
        base_primes.push_back(i);
        for (u64 j = i * i; j <= root; j += i) {
            base_composite[j] = true;
            ++out.stats.mark_operations;
        }
    }

    std::vector<bool> segment;
    for (u64 seg_lo = range.lo; seg_lo <= range.hi;) {
        u64 seg_len = std::min(config.segment_values, range.hi - seg_lo + 1);
        u64 seg_hi = seg_lo + seg_len - 1;
        segment.assign(seg_len, false);

        for (u64 p : base_primes) {
            u64 first = p * p;
            if (first > seg_hi) break;
            if (first < seg_lo) first = ceil_div(seg_lo, p) * p;
            for (u64 j = first; j <= seg_hi;) {
                segment[j - seg_lo] = true;
                ++out.stats.mark_operations;
                if (j > seg_hi - p) break;
                j += p;
            }
        }

        for (u64 v = seg_lo; v <= seg_hi; ++v) {
            ++out.stats.candidates_considered;
            if (v >= 2 && !segment[v - seg_lo]) out.primes.push_back(v);
        }

        if (seg_hi == range.hi) break;
        seg_lo = seg_hi + 1;
    }

    out.stats.primes_found = out.primes.size();
    return out;
}

ComparisonReport compare(SieveRange range, const SieveConfig& config) {
    SieveResult wheel = wheel_sieve(range, config);
    SieveResult baseline = eratosthenes(range, config);

    ComparisonReport report;
    report.range = range;
    report.wheel = wheel.stats;
    report.baseline = baseline.stats;
    report.lists_match = wheel.primes == baseline.primes;
    report.primes_found = wheel.stats.primes_found;
    if (baseline.stats.mark_operations > 0)
        report.mark_ratio = static_cast<double>(wheel.stats.mark_operations) /
                            static_cast<double>(baseline.stats.mark_operations);

    if (!report.lists_match)
        throw consistency_error("wheel and baseline sieves disagree on [" +
                                std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
    return report;
}

} // namespace sextic
