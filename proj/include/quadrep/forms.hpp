#pragma once

#include <utility>

#include "quadrep/numeric.hpp"

namespace quadrep {

/// The pair (a,b) of x(ax+b)/2 or x(ax+b). Construction admits b >= -a so the
/// form is nonnegative over the naturals (b = -a only arises from pbar_3);
/// the theorems' standing hypothesis b > -a is checked where they apply.
struct FormParams {
    i64 a = 1;
    i64 b = 0;

    FormParams() = default;
    FormParams(i64 a_, i64 b_) : a(a_), b(b_) {
        if (a <= 0) throw std::invalid_argument("FormParams: a must be positive");
        if (b < -a) throw std::invalid_argument("FormParams: b must be at least -a");
    }

    bool coprime() const { return gcd_i64(a, b) == 1; }
    bool coprime5() const { return gcd_i64(a, checked_mul(5, b)) == 1; }
    bool a_odd() const { return a % 2 != 0; }
    bool b_odd() const { return b % 2 != 0; }
    bool ab_odd() const { return a_odd() && b_odd(); }
    /// halved forms stay integral exactly when a = b (mod 2)
    bool same_parity() const { return mod_floor(a - b, 2) == 0; }

    bool operator==(const FormParams& o) const { return a == o.a && b == o.b; }
};

/// Evaluates x(ax+b), optionally halved. Wide result: exact for |x| <= 2^30,
/// a,b <= 2^10 and far beyond.
i128 eval_form(const FormParams& p, bool halved, i64 x);

/// eval_form narrowed to i64; throws on overflow.
inline i64 eval_form_i64(const FormParams& p, bool halved, i64 x) {
    return narrow_i64(eval_form(p, halved, x));
}

enum class PolygonalVariant { Standard, Second, Generalized };

/// m-gonal numbers: p_m(n) = ((m-2)n^2 - (m-4)n)/2 and the second kind
/// pbar_m(n) = p_m(-n).
struct PolygonalKind {
    i64 m;
    PolygonalVariant variant;
};

/// Form parameters reproducing p_m / pbar_m pointwise (always halved).
/// Generalized m-gonal numbers use the standard parameters over domain Z.
std::pair<FormParams, bool> polygonal_params(const PolygonalKind& kind);

}  // namespace quadrep
