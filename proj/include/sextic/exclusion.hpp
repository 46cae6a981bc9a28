#pragma once

/**
 * @file exclusion.hpp
 * @brief Divisor-exclusion primality for P = 6^{m+1} * N - 1.
 *
 * Work in the S1 series and fix m >= 1. For every i >= 1 the congruence
 *
 *   N == i^{m+1} mod (6i+1)          (m odd)
 *   N == -i^{m+1} mod (6i+1)         (m even)
 *
 * holds exactly when 6i+1 divides P = 6^{m+1} * N - 1. (Mod 6i+1 one has
 * 6i == -1, so 6^{m+1} == (-1)^{m+1} * i^{-(m+1)}, and the claim follows
 * by multiplying through by i^{m+1}.) A hit therefore certifies a
 * factorization P = (6i+1) * cofactor; P is prime exactly when no i up
 * to the sound bound hits.
 *
 * The sound bound: a composite P in S1 has some divisor == 1 (mod 6)
 * whose cofactor is at least 5, so scanning 6i+1 <= P/5 is enough; a
 * square-root bound would not be, because the 6i+1-side divisor of a
 * composite S1 number can exceed sqrt(P) (215 = 5 * 43).
 *
 * Two engines are provided. theorem_verdict scans the full sound bound.
 * paper_literal_verdict reproduces a shorter textbook-style procedure
 * (complete residue-family lookup for 1 < N <= 13 at m = 1, and a
 * small-i scan capped at 6i+1 <= N for N > 13); it is kept separate so
 * its gaps can be measured against the sound engine.
 */

#include <optional>
#include <queue>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

struct TheoremParams {
    u64 m = 0; // exponent parameter; odd is the theorem proper, even the sign-flipped extension
    u64 N = 0; // index multiplier: P = 6^{m+1} * N - 1

    bool even_extension() const { return m % 2 == 0; }

    friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

/// Certificate that 6i+1 divides P = 6^{m+1} * N - 1:
///   N = residue + divisor * a  and  divisor * cofactor = P.
struct ExclusionWitness {
    u64 i = 0;
    u64 a = 0;
    u64 residue = 0;
    u64 divisor = 0;  // 6i+1, always 1 < divisor < P
    u64 cofactor = 0; // P / divisor, >= 5

    friend bool operator==(const ExclusionWitness&, const ExclusionWitness&) = default;
};

enum class Outcome : unsigned char { prime, composite };
enum class Engine : unsigned char { sound, paper_literal };

struct Verdict {
    TheoremParams params;
    u64 P = 0;
    Outcome outcome = Outcome::prime;
    std::optional<ExclusionWitness> witness; // set iff composite
    Engine engine = Engine::sound;
    u64 i_bound_used = 0;
    u64 checks_performed = 0;
};

/// 6^{m+1} * N - 1; throws std::overflow_error past 64 bits.
u64 theorem_p(u64 N, u64 m);

/// i^{m+1} mod (6i+1) for odd m, its negation mod 6i+1 for even m.
/// Requires i >= 1, m >= 1. Always in (0, 6i+1).
u64 residue(u64 i, u64 m);

/// Largest i worth scanning for N: floor((P/5 - 1) / 6), from the fact
/// that a nontrivial 6i+1 divisor of P has cofactor >= 5.
u64 sound_i_bound(u64 N, u64 m);

/// The advertised operation count max(1, floor(N/6) - 2), defined for
/// N >= 14. Exposed only for bound audits; never used for verdicts.
u64 paper_i_bound(u64 N);

/// Smallest-i witness with i in [1, i_max], if any. Requires N >= 1,
/// m >= 1. Witnesses with divisor >= P are never produced.
std::optional<ExclusionWitness> find_witness(u64 N, u64 m, u64 i_max);

/// m = 1 route through the six residue families: for each q class walk
/// members (6q-1)p + q^2 <= N and solve for the progression step a.
/// Must agree with find_witness(N, 1, i_max) everywhere.
std::optional<ExclusionWitness> find_witness_via_families(u64 N, u64 i_max);

/// Full-bound scan: composite iff some i <= sound_i_bound(N, m) hits.
/// Total for N >= 1 (N = 1 and N = 8 included).
Verdict theorem_verdict(u64 N, u64 m);

/// The short textbook procedure, odd m only; rejects N <= 1 and N = 8
/// (outside its stated domain). May call composites prime; run it
/// through search_counterexamples to measure where.
Verdict paper_literal_verdict(u64 N, u64 m);

struct ExcludedEntry {
    u64 N = 0;
    ExclusionWitness witness; // smallest-i witness for this N
};

/// Streams every excluded N in [2, n_max] in ascending order, each with
/// its smallest-i witness, by merging the progressions
/// residue(i) + (6i+1)*a across i with a priority queue.
class ExcludedSetStream {
public:
    ExcludedSetStream(u64 m, u64 n_max);

    /// Next excluded N, or nullopt when the range is exhausted.
    std::optional<ExcludedEntry> next();

    u64 m() const { return m_; }
    u64 n_max() const { return n_max_; }

private:
    struct Cursor {
        u64 next_n;
        u64 i;
        u64 divisor;
        u64 first_residue;

        bool operator>(const Cursor& o) const {
            return next_n != o.next_n ? next_n > o.next_n : i > o.i;
        }
    };

    u64 m_;
    u64 n_max_;
    std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> heap_;
};

/// Drains a stream into a vector.
std::vector<ExcludedEntry> excluded_set(u64 m, u64 n_max);

} // namespace sextic
