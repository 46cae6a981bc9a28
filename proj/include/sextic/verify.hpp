#pragma once

/**
 * @file verify.hpp
 * @brief Independent ground truth: deterministic primality, trial-division
 *        factoring, and a grid search that cross-checks the exclusion
 *        engine against the reference.
 *
 * Nothing here shares code with the residue machinery it checks.
 */

#include <string>
#include <vector>

#include "sextic/arith.hpp"
#include "sextic/exclusion.hpp"

namespace sextic {

/// Deterministic primality for the full 64-bit range (Miller-Rabin over
/// a fixed base set that is provably sufficient below 2^64).
bool is_prime_ref(u64 v);

/// Trial-division budget for factor_small.
inline constexpr u64 factor_small_budget = 1'000'000'000'000ull;

/// Ascending prime factors with multiplicity. Requires 2 <= v and
/// v <= factor_small_budget.
std::vector<u64> factor_small(u64 v);

/// One point where an engine's verdict contradicts the reference.
struct Disagreement {
    u64 m = 0;
    u64 N = 0;
    u64 P = 0;
    Outcome engine_outcome = Outcome::prime;
    Outcome oracle_outcome = Outcome::prime;
    Engine engine = Engine::sound;
    Verdict verdict; // full context: witness, bound, checks
};

/// Grid point that could not be evaluated (overflow, or outside the
/// literal engine's domain).
struct SkippedPoint {
    u64 m = 0;
    u64 N = 0;
    std::string reason;
};

struct SearchReport {
    std::vector<Disagreement> disagreements; // sorted by (m, N)
    std::vector<SkippedPoint> skipped;       // sorted by (m, N)
};

/// Compares the chosen engine against is_prime_ref over m_list x
/// [n_lo, n_hi]. Points whose P overflows 64 bits are skipped and
/// reported, as are points outside the literal engine's domain.
/// threads == 0 picks SEXTIC_SIEVE_THREADS or the hardware default.
SearchReport search_counterexamples(std::vector<u64> m_list, u64 n_lo, u64 n_hi,
                                    Engine engine, unsigned threads = 0);

/// Thread-count policy: explicit request, else SEXTIC_SIEVE_THREADS, else
/// hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

} // namespace sextic
