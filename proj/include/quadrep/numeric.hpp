#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadrep {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Checked arithmetic: any overflow throws, values never wrap.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i64 add overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i64 sub overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i64 mul overflow");
    return r;
}

inline i128 checked_add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 add overflow");
    return r;
}

inline i128 checked_sub128(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i128 sub overflow");
    return r;
}

inline i128 checked_mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 mul overflow");
    return r;
}

inline i64 narrow_i64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::overflow_error("value does not fit in i64");
    return static_cast<i64>(v);
}

std::string to_string_i128(i128 v);

/// floor(sqrt(n)), pure integer Newton iteration.
u64 isqrt_u64(u64 n);
u128 isqrt_u128(u128 n);

inline i64 isqrt_i64(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return static_cast<i64>(isqrt_u64(static_cast<u64>(n)));
}

inline bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt_i64(n);
    return r * r == n;
}

/// floor division (rounds toward negative infinity), d > 0.
inline i64 floor_div(i64 n, i64 d) {
    i64 q = n / d, r = n % d;
    return (r != 0 && r < 0) ? q - 1 : q;
}

/// nonnegative remainder in [0, d), d > 0.
inline i64 mod_floor(i64 n, i64 d) {
    i64 r = n % d;
    return r < 0 ? r + d : r;
}

i64 gcd_i64(i64 a, i64 b);

/// g = gcd(a,b) together with x,y solving a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

/// Solution class of A*x = C (mod M), M > 0.
struct CongruenceClass {
    i64 rep;      // least nonnegative representative
    i64 modulus;  // M / gcd(A, M)
};

/// Solves A*x = C (mod M); throws std::domain_error when gcd(A,M) does not divide C.
CongruenceClass solve_congruence(i64 A, i64 C, i64 M);

/// Combines x = r1 (mod m1) with x = r2 (mod m2), gcd(m1,m2) = 1.
CongruenceClass crt_combine(const CongruenceClass& c1, const CongruenceClass& c2);

/// FNV-1a, used for reproducible pseudo-random draws keyed by strings.
inline u64 fnv1a(const std::string& s) {
    u64 h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// splitmix64 step; deterministic across platforms.
inline u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace quadrep
