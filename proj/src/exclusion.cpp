#include "sextic/exclusion.hpp"

#include <stdexcept>

#include "sextic/errors.hpp"
#include "sextic/mod_closed_form.hpp"

namespace sextic {

namespace {

u64 wheel_divisor(u64 i) {
    return checked_add(checked_mul(6, i), 1); // 6i + 1
}

void require_params(u64 N, u64 m) {
    if (N == 0) throw std::invalid_argument("N must be >= 1");
    if (m == 0) throw std::invalid_argument("m must be >= 1");
}

/// Completes a congruence hit (N % divisor == residue) into a witness.
/// The divisibility divisor | P is implied; a failed division would
/// falsify the derivation and is treated as an internal bug.
ExclusionWitness make_witness(u64 N, u64 P, u64 i, u64 divisor, u64 res) {
    if (P % divisor != 0)
        throw consistency_error("congruence hit without divisibility: i=" + std::to_string(i) +
                                " N=" + std::to_string(N));
    return ExclusionWitness{i, (N - res) / divisor, res, divisor, P / divisor};
}

/// i^2 mod (6i+1) via the residue families, branch-light for hot scans.
u64 residue_m1(u64 i) {
    u64 p = i / 6, q = i % 6;
    if (q == 0) {
        q = 6;
        --p;
    }
    return (6 * q - 1) * p + q * q;
}

} // namespace

u64 theorem_p(u64 N, u64 m) {
    require_params(N, m);
    return checked_mul(checked_pow(6, m + 1), N) - 1;
}

u64 residue(u64 i, u64 m) {
    if (i == 0) throw std::invalid_argument("i must be >= 1");
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    u64 divisor = wheel_divisor(i);
    u64 r = pow_mod(i, m + 1, divisor);
    // gcd(i, 6i+1) = 1, so r is never 0.
    return m % 2 == 1 ? r : divisor - r;
}

u64 sound_i_bound(u64 N, u64 m) {
    u64 P = theorem_p(N, m);
    u64 fifth = P / 5;
    return fifth >= 7 ? (fifth - 1) / 6 : 1;
}

u64 paper_i_bound(u64 N) {
    if (N < 14) throw std::invalid_argument("advertised count applies to N >= 14 only");
    u64 b = N / 6;
    return b >= 3 ? b - 2 : 1;
}

std::optional<ExclusionWitness> find_witness(u64 N, u64 m, u64 i_max) {
    require_params(N, m);
    if (i_max == 0) throw std::invalid_argument("i_max must be >= 1");
    u64 P = theorem_p(N, m);
    bool odd_m = m % 2 == 1;
    // The loop self-limits at divisor >= P, which is reached long before
    // 6i+1 could wrap, so no overflow check is needed on i_max itself.
    for (u64 i = 1; i <= i_max; ++i) {
        u64 divisor = 6 * i + 1;
        if (divisor >= P) break; // only trivial divisors beyond this point
        u64 r;
        if (odd_m) {
            r = m == 1 ? residue_m1(i) : pow_mod(i, m + 1, divisor);
        } else {
            r = divisor - pow_mod(i, m + 1, divisor);
        }
        if (N % divisor == r)
            return make_witness(N, P, i, divisor, r);
    }
    return std::nullopt;
}

std::optional<ExclusionWitness> find_witness_via_families(u64 N, u64 i_max) {
    if (N == 0) throw std::invalid_argument("N must be >= 1");
    if (i_max == 0) throw std::invalid_argument("i_max must be >= 1");
    u64 P = theorem_p(N, 1);
    std::optional<ExclusionWitness> best;
    for (const LinearFamily& fam : residue_families(6, 1)) {
        // Walk this family's residues r = slope*p + q^2 while r <= N; the
        // first step p whose divisor 6(6p+q)+1 divides N - r gives the
        // smallest i within the q class.
        for (u64 p = 0;; ++p) {
            u64 r = fam.slope * p + fam.intercept;
            if (r > N) break;
            u64 i = 6 * p + fam.offset;
            if (i > i_max) break;
            u64 divisor = 6 * i + 1;
            if (divisor >= P) break;
            if ((N - r) % divisor == 0) {
                if (!best || i < best->i)
                    best = make_witness(N, P, i, divisor, r);
                break;
            }
        }
    }
    return best;
}

Verdict theorem_verdict(u64 N, u64 m) {
    Verdict v;
    v.params = TheoremParams{m, N};
    v.P = theorem_p(N, m);
    v.engine = Engine::sound;
    v.i_bound_used = sound_i_bound(N, m);
    v.witness = find_witness(N, m, v.i_bound_used);
    v.outcome = v.witness ? Outcome::composite : Outcome::prime;
    v.checks_performed = v.witness ? v.witness->i : v.i_bound_used;
    return v;
}

Verdict paper_literal_verdict(u64 N, u64 m) {
    require_params(N, m);
    if (m % 2 == 0) throw std::invalid_argument("literal engine is defined for odd m only");
    if (N == 1 || N == 8) throw std::invalid_argument("literal engine excludes N = 1 and N = 8");

    Verdict v;
    v.params = TheoremParams{m, N};
    v.P = theorem_p(N, m);
    v.engine = Engine::paper_literal;

    if (N <= 13) {
        // Residue-only check. At m = 1 the families answer "is N one of
        // the residues" completely, over all i at once.
        if (m == 1) {
            v.i_bound_used = sound_i_bound(N, m);
            v.checks_performed = 6;
            if (auto slot = family_membership(N, 6, 1)) {
                u64 i = 6 * slot->steps + slot->offset;
                v.witness = make_witness(N, v.P, i, 6 * i + 1, N);
            }
        } else {
            v.i_bound_used = sound_i_bound(N, m);
            for (u64 i = 1; i <= v.i_bound_used; ++i) {
                ++v.checks_performed;
                if (residue(i, m) == N) {
                    v.witness = make_witness(N, v.P, i, 6 * i + 1, N);
                    break;
                }
            }
        }
    } else {
        // Small-i scan: stop as soon as 6i+1 exceeds N, since then even
        // a = 1 overshoots. Witnesses with larger i are out of reach of
        // this procedure; the sound engine exists to find them.
        v.i_bound_used = (N - 1) / 6;
        for (u64 i = 1; 6 * i + 1 <= N; ++i) {
            ++v.checks_performed;
            u64 divisor = 6 * i + 1;
            u64 r = residue(i, m);
            if (r == N || (N >= r && (N - r) % divisor == 0)) {
                v.witness = make_witness(N, v.P, i, divisor, r);
                break;
            }
        }
    }
    v.outcome = v.witness ? Outcome::composite : Outcome::prime;
    return v;
}

ExcludedSetStream::ExcludedSetStream(u64 m, u64 n_max) : m_(m), n_max_(n_max) {
    if (m == 0) throw std::invalid_argument("m must be >= 1");
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
    theorem_p(n_max, m); // the whole range must stay within 64 bits
    u64 seed_bound = sound_i_bound(n_max, m);
    // Progressions are increasing, so any i whose first residue already
    // exceeds n_max can never contribute.
    std::vector<Cursor> cursors;
    for (u64 i = 1; i <= seed_bound; ++i) {
        u64 r = m == 1 ? residue_m1(i) : residue(i, m);
        if (r <= n_max) cursors.push_back(Cursor{r, i, 6 * i + 1, r});
    }
    heap_ = std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>>(
        std::greater<>{}, std::move(cursors));
}

std::optional<ExcludedEntry> ExcludedSetStream::next() {
    while (!heap_.empty()) {
        Cursor cur = heap_.top();
        heap_.pop();
        u64 n = cur.next_n;

        // Advance this cursor and keep it if it still has members in range.
        if (n_max_ - n >= cur.divisor) {
            cur.next_n = n + cur.divisor;
            heap_.push(cur);
        }

        // Duplicates of n sit at the top of the heap with larger i; the
        // first pop carried the smallest-i witness.
        while (!heap_.empty() && heap_.top().next_n == n) {
            Cursor dup = heap_.top();
            heap_.pop();
            if (n_max_ - n >= dup.divisor) {
                dup.next_n = n + dup.divisor;
                heap_.push(dup);
            }
        }

        if (n < 2) continue; // progression 1 + 7a starts below the domain
        u64 P = theorem_p(n, m_);
        ExclusionWitness w{cur.i, (n - cur.first_residue) / cur.divisor, cur.first_residue,
                           cur.divisor, 0};
        if (P % w.divisor != 0)
            throw consistency_error("streamed hit without divisibility at N=" + std::to_string(n));
        w.cofactor = P / w.divisor;
        return ExcludedEntry{n, w};
    }
    return std::nullopt;
}

std::vector<ExcludedEntry> excluded_set(u64 m, u64 n_max) {
    ExcludedSetStream stream(m, n_max);
    std::vector<ExcludedEntry> out;
    while (auto entry = stream.next()) out.push_back(*entry);
    return out;
}

} // namespace sextic
