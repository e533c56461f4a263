#include "quadrep/numeric.hpp"

#include <algorithm>

namespace quadrep {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 uv = neg ? u128(0) - u128(v) : u128(v);
    std::string s;
    while (uv) {
        s.push_back(char('0' + int(uv % 10)));
        uv /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    // seed from bit length, then Newton; converges in a few steps
    int bits = 64 - __builtin_clzll(n);
    u64 x = u64(1) << ((bits + 1) / 2);
    while (true) {
        u64 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n && (x + 1) != 0) ++x;
    return x;
}

u128 isqrt_u128(u128 n) {
    if (n <= u128(UINT64_MAX)) return isqrt_u64(u64(n));
    int bits = 128 - (n >> 64 ? __builtin_clzll(u64(n >> 64)) : 64 + __builtin_clzll(u64(n)));
    u128 x = u128(1) << ((bits + 1) / 2);
    while (true) {
        u128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    x = old_s;
    y = old_t;
    return old_r;
}

CongruenceClass solve_congruence(i64 A, i64 C, i64 M) {
    if (M <= 0) throw std::domain_error("solve_congruence: modulus must be positive");
    A = mod_floor(A, M);
    C = mod_floor(C, M);
    i64 x, y;
    i64 g = ext_gcd(A, M, x, y);
    if (g == 0) {  // A = 0 (mod M)
        if (C != 0) throw std::domain_error("solve_congruence: no solution (A=0, C!=0)");
        return {0, 1};
    }
    if (C % g != 0) throw std::domain_error("solve_congruence: gcd does not divide constant");
    i64 m = M / g;
    // x solves (A/g)*x = 1 (mod m); scale by C/g
    i64 r = mod_floor(narrow_i64(checked_mul128(i128(mod_floor(x, m)), i128(mod_floor(C / g, m))) % m), m);
    return {r, m};
}

CongruenceClass crt_combine(const CongruenceClass& c1, const CongruenceClass& c2) {
    i64 x, y;
    i64 g = ext_gcd(c1.modulus, c2.modulus, x, y);
    if (g != 1) throw std::domain_error("crt_combine: moduli not coprime");
    i64 m = checked_mul(c1.modulus, c2.modulus);
    // r = r1 + m1 * ((r2 - r1) * inv(m1) mod m2)
    i64 diff = mod_floor(c2.rep - c1.rep, c2.modulus);
    i64 inv = mod_floor(x, c2.modulus);
    i64 k = narrow_i64(checked_mul128(i128(diff), i128(inv)) % c2.modulus);
    return {mod_floor(checked_add(c1.rep, checked_mul(c1.modulus, k)), m), m};
}

}  // namespace quadrep
