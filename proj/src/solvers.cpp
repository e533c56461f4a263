#include "quadrep/solvers.hpp"

#include <algorithm>

namespace quadrep {

namespace {

[[noreturn]] void impossible(const char* lemma, i64 c, i64 d) {
    // reaching this under valid preconditions would falsify the lemma
    throw std::logic_error(std::string("no solution found for ") + lemma +
                           " with c=" + std::to_string(c) + " d=" + std::to_string(d) +
                           "; preconditions held, so this contradicts the lemma");
}

void check_pre(bool ok, const char* what, i64 c, i64 d) {
    if (!ok)
        throw std::invalid_argument(std::string("precondition violated: ") + what +
                                    " (c=" + std::to_string(c) + ", d=" + std::to_string(d) + ")");
}

// Given y+z = sum and y^2+z^2 = sq, the unique y <= z pair if any.
// Returns true and fills (y,z) when it exists over the integers.
bool split_pair(i64 sum, i64 sq, i64& y, i64& z) {
    i64 disc = 2 * sq - sum * sum;
    if (disc < 0) return false;
    i64 e = isqrt_i64(disc);
    if (e * e != disc) return false;
    if (mod_floor(sum - e, 2) != 0) return false;
    y = (sum - e) / 2;
    z = sum - y;
    return true;
}

}  // namespace

Witness cauchy_solve(i64 c, i64 d) {
    if (c == 0 && d == 0) return {{0, 0, 0, 0}, Domain::N};  // degenerate case, accepted
    CauchyPair pair{c, d};
    check_pre(c >= 0 && d >= 0, "c,d >= 0", c, d);
    check_pre(pair.parity_ok(), "c = d (mod 2)", c, d);
    check_pre(pair.not_div4(), "4 must not divide c", c, d);
    check_pre(pair.cauchy_window(), "4c > d^2 and 3c < d^2+2d+4", c, d);
    for (i64 w = 0; 4 * w <= d && 4 * w * w <= c; ++w) {
        for (i64 x = w; w + 3 * x <= d && w * w + 3 * x * x <= c; ++x) {
            i64 y, z;
            if (!split_pair(d - w - x, c - w * w - x * x, y, z)) continue;
            if (y < x) continue;
            return {{w, x, y, z}, Domain::N};
        }
    }
    impossible("cauchy lemma", c, d);
}

Witness cauchy_solve_z(i64 c, i64 d) {
    if (c == 0 && d == 0) return {{0, 0, 0, 0}, Domain::Z};
    CauchyPair pair{c, d};
    check_pre(c >= 0 && d >= 0, "c,d >= 0", c, d);
    check_pre(pair.parity_ok(), "c = d (mod 2)", c, d);
    check_pre(pair.not_div4(), "4 must not divide c", c, d);
    check_pre(pair.cauchy_lower(), "4c > d^2", c, d);
    i64 S = isqrt_i64(c);
    for (i64 s = -S; s <= S; ++s) {
        i64 tb = isqrt_i64(c - s * s);
        for (i64 t = std::max(s, -tb); t <= tb; ++t) {
            i64 u, v;
            if (!split_pair(d - s - t, c - s * s - t * t, u, v)) continue;
            if (u < t) continue;
            return {{s, t, u, v}, Domain::Z};
        }
    }
    impossible("integer cauchy lemma", c, d);
}

Witness lem_ms_solve(i64 c, i64 d) {
    CauchyPair pair{c, d};
    check_pre(c >= 1 && d >= 1, "c,d >= 1", c, d);
    check_pre(pair.parity_ok(), "c = d (mod 2)", c, d);
    check_pre(pair.lem_ms_residue_ok(), "c = 3 (mod 9) or 3 must not divide d", c, d);
    check_pre(pair.lem_ms_window(), "6c > d^2 and 5c < d^2+2d+6", c, d);
    i64 xb = isqrt_i64(c);
    for (i64 x = 0; x <= xb && 3 * x * x <= c; ++x) {
        for (i64 y = x; x * x + 2 * y * y <= c && x + 2 * y <= d; ++y) {
            // remaining: 3w^2 + z^2 = C3, 3w + z = D3
            i64 D3 = d - x - y, C3 = c - x * x - y * y;
            i64 disc = 3 * (4 * C3 - D3 * D3);
            if (disc < 0) continue;
            i64 e = isqrt_i64(disc);
            if (e * e != disc) continue;
            for (i64 num : {3 * D3 + e, 3 * D3 - e}) {
                if (mod_floor(num, 12) != 0) continue;
                i64 w = num / 12;
                if (w < 0) continue;
                i64 z = D3 - 3 * w;
                if (z < y) continue;
                return {{w, x, y, z}, Domain::N};
            }
        }
    }
    impossible("weighted 3w^2 lemma", c, d);
}

KsSolution ks_solve(i64 m) {
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("ks_solve: m must be even and nonnegative");
    if (in_E(m)) throw std::invalid_argument("ks_solve: m is in the exclusion set E");
    i64 xb = isqrt_i64(m);
    for (i64 x = 0; x <= xb; ++x) {
        i64 yb = isqrt_i64(m - x * x);
        for (i64 y = -yb; y <= yb; ++y) {
            // 3z^2 + 2(x+y)z + (2x^2+2y^2+(x+y)^2-2m) = 0
            i64 D = 6 * m - 6 * x * x - 6 * y * y - 2 * (x + y) * (x + y);
            if (D < 0) continue;
            i64 e = isqrt_i64(D);
            if (e * e != D) continue;
            for (i64 num : {-(x + y) - e, -(x + y) + e}) {
                if (mod_floor(num, 3) != 0) continue;
                i64 z = num / 3;
                i64 s = x + y + z;
                if (s % 2 != 0) continue;
                if (x * x + y * y + z * z + (s * s) / 2 != m) continue;
                return {x, y, z};
            }
        }
    }
    // unreachable for even m outside E
    throw std::logic_error("ks_solve: no solution for m=" + std::to_string(m) +
                           " although m is even and outside E; contradicts the lemma");
}

FiveAdicClass FiveAdicClass::of(i64 n) {
    if (n < 0) throw std::invalid_argument("FiveAdicClass: n must be nonnegative");
    FiveAdicClass out;
    out.n = n;
    if (n == 0) return out;
    int v = 0;
    i64 m = n;
    while (m % 5 == 0) {
        m /= 5;
        ++v;
    }
    out.valuation = v;
    out.cofactor = m;
    return out;
}

bool in_E(i64 n) { return FiveAdicClass::of(n).in_exclusion_set(); }

}  // namespace quadrep
