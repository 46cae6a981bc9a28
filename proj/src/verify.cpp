#include "sextic/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace sextic {

namespace {

// Base set provably sufficient for deterministic Miller-Rabin below 2^64
// (covers everything under 3.3 * 10^24).
constexpr u64 kWitnessBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(u64 n, u64 base, u64 odd_part, int two_exp) {
    u64 x = pow_mod(base, odd_part, n);
    if (x == 1 || x == n - 1) return true;
    for (int round = 1; round < two_exp; ++round) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_ref(u64 v) {
    if (v < 2) return false;
    for (u64 p : kWitnessBases) {
        if (v == p) return true;
        if (v % p == 0) return false;
    }
    // v > 37^2 would be needed for a semiprime to survive the division
    // pass; everything below 41^2 that reached here is prime.
    if (v < 41 * 41) return true;

    u64 odd_part = v - 1;
    int two_exp = 0;
    while ((odd_part & 1) == 0) {
        odd_part >>= 1;
        ++two_exp;
    }
    for (u64 base : kWitnessBases)
        if (!miller_rabin_round(v, base, odd_part, two_exp)) return false;
    return true;
}

std::vector<u64> factor_small(u64 v) {
    if (v < 2) throw std::invalid_argument("factor_small: v must be >= 2");
    if (v > factor_small_budget)
        throw std::invalid_argument("factor_small: v exceeds the trial-division budget");
    std::vector<u64> factors;
    for (u64 p : {u64(2), u64(3)}) {
        while (v % p == 0) {
            factors.push_back(p);
            v /= p;
        }
    }
    // Remaining factors are coprime to 6; step through 6k+-1 candidates.
    u64 d = 5;
    int step = 2; // 5, 7, 11, 13, ... alternating +2, +4
    while (u128(d) * d <= v) {
        while (v % d == 0) {
            factors.push_back(d);
            v /= d;
        }
        d += step;
        step = 6 - step;
    }
    if (v > 1) factors.push_back(v);
    return factors;
}

unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEXTIC_SIEVE_THREADS")) {
        char* end = nullptr;
        unsigned long parsed = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) return static_cast<unsigned>(parsed);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

struct ChunkResult {
    std::vector<Disagreement> disagreements;
    std::vector<SkippedPoint> skipped;
};

ChunkResult search_chunk(u64 m, u64 n_lo, u64 n_hi, Engine engine) {
    ChunkResult out;
    for (u64 n = n_lo; n <= n_hi; ++n) {
        if (engine == Engine::paper_literal && (n < 2 || n == 8)) {
            out.skipped.push_back({m, n, "outside literal engine domain"});
            continue;
        }
        Verdict verdict;
        try {
            verdict = engine == Engine::sound ? theorem_verdict(n, m)
                                              : paper_literal_verdict(n, m);
        } catch (const std::overflow_error&) {
            out.skipped.push_back({m, n, "P exceeds 64-bit range"});
            continue;
        }
        Outcome oracle = is_prime_ref(verdict.P) ? Outcome::prime : Outcome::composite;
        if (oracle != verdict.outcome)
            out.disagreements.push_back(
                {m, n, verdict.P, verdict.outcome, oracle, engine, verdict});
    }
    return out;
}

} // namespace

SearchReport search_counterexamples(std::vector<u64> m_list, u64 n_lo, u64 n_hi,
                                    Engine engine, unsigned threads) {
    if (n_lo == 0 || n_lo > n_hi) throw std::invalid_argument("need 1 <= n_lo <= n_hi");
    if (m_list.empty()) throw std::invalid_argument("m_list must not be empty");
    for (u64 m : m_list) {
        if (m == 0) throw std::invalid_argument("m must be >= 1");
        if (engine == Engine::paper_literal && m % 2 == 0)
            throw std::invalid_argument("literal engine is defined for odd m only");
    }
    std::sort(m_list.begin(), m_list.end());
    m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());

    unsigned worker_count = resolve_thread_count(threads);
    SearchReport report;
    for (u64 m : m_list) {
        u64 span = n_hi - n_lo + 1;
        u64 chunks = std::min<u64>(worker_count, span);
        std::vector<std::future<ChunkResult>> futures;
        futures.reserve(chunks);
        for (u64 c = 0; c < chunks; ++c) {
            u64 lo = n_lo + span * c / chunks;
            u64 hi = n_lo + span * (c + 1) / chunks - 1;
            futures.push_back(chunks == 1
                                  ? std::async(std::launch::deferred, search_chunk, m, lo, hi, engine)
                                  : std::async(std::launch::async, search_chunk, m, lo, hi, engine));
        }
        // Chunks are contiguous and ascending, so appending in order keeps
        // the report sorted by (m, N).
        for (auto& f : futures) {
            ChunkResult chunk = f.get();
            report.disagreements.insert(report.disagreements.end(),
                                        chunk.disagreements.begin(), chunk.disagreements.end());
            report.skipped.insert(report.skipped.end(), chunk.skipped.begin(),
                                  chunk.skipped.end());
        }
    }
    return report;
}

} // namespace sextic
