#include "quadrep/real_bound.hpp"

#include <cmath>

namespace quadrep {

namespace {

// sign of a^2 - b with a >= 0, both i128; a^2 computed checked
int square_vs(i128 a, i128 b) {
    i128 sq = checked_mul128(a, a);
    if (sq > b) return 1;
    if (sq < b) return -1;
    return 0;
}

}  // namespace

int radical_sign(i128 s, i128 q, i128 r) {
    if (q == 0 || r == 0) return s > 0 ? 1 : (s < 0 ? -1 : 0);
    if (q > 0) {
        if (s >= 0) return 1;  // positive radical plus nonnegative part
        // compare q^2 r with s^2
        i128 qr = checked_mul128(checked_mul128(q, q), r);
        int c = square_vs(-s, qr);  // s^2 vs q^2 r
        return c < 0 ? 1 : (c > 0 ? -1 : 0);
    }
    return -radical_sign(-s, -q, r);
}

RealBound::RealBound(i64 p, i64 q, i64 r, i64 den) : p_(p), q_(q), r_(r), den_(den) {
    if (den_ <= 0) throw std::invalid_argument("RealBound: denominator must be positive");
    if (q_ < 0) throw std::invalid_argument("RealBound: radical coefficient must be nonnegative");
    if (r_ < 0) throw std::domain_error("RealBound: negative radicand");
    normalize();
}

void RealBound::normalize() {
    if (q_ == 0 || r_ == 0) {
        q_ = 0;
        r_ = 0;
    } else {
        i64 s = isqrt_i64(r_);
        if (s * s == r_) {  // fold perfect squares: surviving radicals are irrational
            p_ = checked_add(p_, checked_mul(q_, s));
            q_ = 0;
            r_ = 0;
        }
    }
    i64 g = gcd_i64(gcd_i64(p_, q_), den_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        den_ /= g;
    }
}

int RealBound::compare_to_int(i64 k) const {
    i128 s = checked_sub128(i128(p_), checked_mul128(i128(k), i128(den_)));
    return radical_sign(s, i128(q_), i128(r_));
}

int RealBound::compare(const RealBound& o) const {
    // sign of (p1 d2 - p2 d1) + q1 d2 sqrt(r1) - q2 d1 sqrt(r2)
    i128 s = checked_sub128(checked_mul128(i128(p_), i128(o.den_)),
                            checked_mul128(i128(o.p_), i128(den_)));
    i128 A = checked_mul128(i128(q_), i128(o.den_));
    i128 B = checked_mul128(i128(o.q_), i128(den_));
    if (q_ == 0) return radical_sign(s, -B, o.r_);
    if (o.q_ == 0) return radical_sign(s, A, r_);
    if (r_ == o.r_) return radical_sign(s, checked_sub128(A, B), r_);
    // X = s + A sqrt(r1) versus Y = B sqrt(r2), both radicals live
    int sx = radical_sign(s, A, r_);
    if (sx <= 0) return -1;  // Y > 0 always here
    // X > 0: compare X^2 - Y^2 = (s^2 + A^2 r1 - B^2 r2) + 2 s A sqrt(r1)
    i128 t = checked_add128(checked_sub128(checked_mul128(s, s),
                                           checked_mul128(checked_mul128(B, B), i128(o.r_))),
                            checked_mul128(checked_mul128(A, A), i128(r_)));
    i128 u = checked_mul128(i128(2), checked_mul128(s, A));
    return radical_sign(t, u, i128(r_));
}

i64 RealBound::least_integer_above() const {
    // floor estimate from the integer square root, then exact adjustment
    i128 f = i128(isqrt_u128(u128(checked_mul128(checked_mul128(i128(q_), i128(q_)), i128(r_)))));
    i64 k = narrow_i64(floor_div(narrow_i64(checked_add128(i128(p_), f)), den_));
    while (compare_to_int(k) >= 0) ++k;      // need k > value
    while (compare_to_int(k - 1) < 0) --k;   // minimality
    return k;
}

i64 RealBound::least_integer_at_least() const {
    i64 k = least_integer_above();
    if (compare_to_int(k - 1) == 0) return k - 1;
    return k;
}

RealBound RealBound::plus_int(i64 k) const {
    return RealBound(checked_add(p_, checked_mul(k, den_)), q_, r_, den_);
}

RealBound RealBound::scaled(i64 k) const {
    if (k <= 0) throw std::invalid_argument("RealBound::scaled: factor must be positive");
    return RealBound(checked_mul(p_, k), checked_mul(q_, k), r_, den_);
}

double RealBound::approx() const {
    return (double(p_) + double(q_) * std::sqrt(double(r_))) / double(den_);
}

std::string RealBound::to_string() const {
    std::string core;
    if (q_ == 0) {
        core = std::to_string(p_);
    } else {
        core = std::to_string(p_) + " + " + (q_ == 1 ? "" : std::to_string(q_) + "*") + "sqrt(" +
               std::to_string(r_) + ")";
    }
    if (den_ == 1) return core;
    return "(" + core + ")/" + std::to_string(den_);
}

}  // namespace quadrep
