#pragma once

/**
 * @file arith.hpp
 * @brief Unsigned 64-bit helpers: overflow-checked arithmetic and modular
 *        exponentiation with 128-bit intermediates.
 *
 * Everything in the library works on uint64_t values. Operations that
 * could wrap throw std::overflow_error instead of wrapping silently.
 */

#include <cstdint>
#include <stdexcept>

namespace sextic {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("addition exceeds 64-bit range");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("product exceeds 64-bit range");
    return r;
}

/// base^exp, throwing on 64-bit overflow.
inline u64 checked_pow(u64 base, u64 exp) {
    u64 result = 1;
    while (exp > 0) {
        if (exp & 1) result = checked_mul(result, base);
        exp >>= 1;
        if (exp > 0) base = checked_mul(base, base);
    }
    return result;
}

/// (a * b) mod m without overflow. Requires m >= 1.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(u128(a) * b % m);
}

/// (base^exp) mod m by repeated squaring. Requires m >= 1.
inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Largest r with r*r <= n.
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && (u128(r) * r > n)) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace sextic
