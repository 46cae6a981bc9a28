#pragma once

/**
 * @file sieve.hpp
 * @brief Two prime sieves over a value range, instrumented for comparison.
 *
 * wheel_sieve works entirely in wheel coordinates: candidates are the
 * 6n+-1 values, and composites are crossed off index-first by enumerating
 * the factor-index pairs of the three product patterns (see wheel.hpp),
 * starting each pattern at a == b so marking begins at the square of the
 * smaller factor. No divisions and no base-prime list are involved.
 *
 * eratosthenes is the classic segmented baseline. Both sieves count
 * every marking write they perform, so the two algorithms' work can be
 * compared on equal terms.
 */

#include <functional>
#include <optional>
#include <vector>

#include "sextic/arith.hpp"
#include "sextic/wheel.hpp"

namespace sextic {

struct SieveRange {
    u64 lo = 1;
    u64 hi = 1;
};

enum class SieveAlgorithm : unsigned char { wheel6, eratosthenes };

struct SieveStats {
    SieveAlgorithm algorithm = SieveAlgorithm::wheel6;
    // Cells examined for primality within [lo, hi]. The wheel sieve only
    // ever considers 6n+-1 values (plus the explicit 2 and 3); the
    // baseline considers every integer in range.
    u64 candidates_considered = 0;
    // Marking writes performed, counting repeats. For the baseline this
    // includes the base-prime sieve it needs below sqrt(hi).
    u64 mark_operations = 0;
    u64 primes_found = 0;

    friend bool operator==(const SieveStats&, const SieveStats&) = default;
};

struct SieveConfig {
    u64 segment_indices = u64(1) << 20; // wheel indices per series per segment
    u64 segment_values = u64(1) << 21;  // values per segment in the baseline
    u64 memory_budget_bytes = u64(256) << 20;
};

struct SieveResult {
    std::vector<u64> primes;
    SieveStats stats;
};

/// Exactly the primes in [lo, hi], wheel-coordinate marking.
/// Throws capacity_error when buffers would exceed the memory budget.
SieveResult wheel_sieve(SieveRange range, const SieveConfig& config = {});

/// Exactly the primes in [lo, hi], classic segmented sieve.
SieveResult eratosthenes(SieveRange range, const SieveConfig& config = {});

struct ComparisonReport {
    SieveRange range;
    SieveStats wheel;
    SieveStats baseline;
    bool lists_match = false;
    u64 primes_found = 0;
    // wheel marks / baseline marks; absent when the baseline made no marks.
    std::optional<double> mark_ratio;
};

/// Runs both sieves and checks they produced the same list. A mismatch
/// throws consistency_error; it would mean one of the sieves is wrong.
ComparisonReport compare(SieveRange range, const SieveConfig& config = {});

/// Enumerates every composite index of `series` with n in [n_lo, n_hi]:
/// each (pattern, a, b) pair whose product lands there, both orientations
/// of the mixed pattern included. Visit order is deterministic.
void for_each_composite_index(Series series, u64 n_lo, u64 n_hi,
                              const std::function<void(const CompositeIndex&)>& visit);

} // namespace sextic
