#include "quadrep/thresholds.hpp"

#include <map>

namespace quadrep {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("threshold: " + what);
}

void require_standing(const FormParams& p) {
    require(p.b > -p.a, "requires b > -a");
}

// the (n>) bound of the order-four theorem for x(ax+b), doubled form
RealBound bound_th21(i64 a, i64 b) {
    i64 u = checked_add(checked_mul(4 * a, checked_add(checked_mul(7 * a, a - 1), 1)),
                        checked_mul(2 * (7 * a - 2), b));
    i64 v = checked_mul(2, checked_add(checked_mul(2 * a, 2 * a - 1), b));
    i64 r = checked_mul(6, checked_add(checked_mul(2 * a, a - 1), b));
    return RealBound::radical(u, v, r);
}

RealBound bound_th22(i64 a, i64 b) {
    i64 a3 = checked_mul(checked_mul(a, a), a);
    i64 u = checked_add(checked_add(checked_sub(checked_mul(28, a3), checked_mul(14, a * a)), a),
                        checked_mul(7 * a - 1, b));
    i64 v = checked_add(checked_mul(2 * a, 4 * a - 1), b);
    i64 r = checked_mul(3, checked_add(checked_mul(2 * a, 2 * a - 1), b));
    return RealBound::radical(u, v, r);
}

RealBound bound_th2(i64 a, i64 b, bool halved_corollary) {
    i64 m = checked_add(checked_mul(60, checked_mul(a, a)), b);
    i64 u = checked_mul(checked_mul(550, a), m);
    i64 v = checked_mul(25, checked_add(checked_mul(120, checked_mul(a, a)), b));
    i64 r = checked_mul(2, m);
    if (halved_corollary) return RealBound::radical(u, v, r, 2);
    return RealBound::radical(u, v, r);
}

// quotient-form bound shared by th3 (with the +a term) and cor1.9 (without)
RealBound bound_th3(i64 a, i64 b, bool with_a_term) {
    i64 u = checked_add(checked_mul(checked_mul(66, a * a), 9 * a - 1),
                        checked_mul(33 * a - 1, b));
    if (with_a_term) u = checked_add(u, a);
    i64 v = checked_add(checked_mul(2 * a, 18 * a - 1), b);
    i64 r = checked_mul(15, checked_add(checked_mul(2 * a, 9 * a - 1), b));
    return RealBound::radical(u, v, r);
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::TH11: return "th1.1";
        case TheoremId::TH12_ODD: return "th1.2-odd";
        case TheoremId::TH12_EVEN_QUARTER: return "th1.2-even-quarter";
        case TheoremId::TH13: return "th1.3";
        case TheoremId::TH21: return "th2.1";
        case TheoremId::TH22: return "th2.2";
        case TheoremId::TH2: return "th2";
        case TheoremId::TH3: return "th3";
        case TheoremId::COR19: return "cor1.9";
        case TheoremId::COR2: return "cor2";
        case TheoremId::TH51: return "th5.1";
        case TheoremId::TH52_EVEN_A: return "th5.2-even-a";
        case TheoremId::TH52_EVEN_B: return "th5.2-even-b";
    }
    throw std::logic_error("theorem_name: unreachable");
}

TheoremId theorem_from_name(const std::string& name) {
    static const std::map<std::string, TheoremId> table = {
        {"th1.1", TheoremId::TH11},
        {"th1.2-odd", TheoremId::TH12_ODD},
        {"th1.2-even-quarter", TheoremId::TH12_EVEN_QUARTER},
        {"th1.3", TheoremId::TH13},
        {"th2.1", TheoremId::TH21},
        {"th2.2", TheoremId::TH22},
        {"th2", TheoremId::TH2},
        {"th3", TheoremId::TH3},
        {"cor1.9", TheoremId::COR19},
        {"cor2", TheoremId::COR2},
        {"th5.1", TheoremId::TH51},
        {"th5.2-even-a", TheoremId::TH52_EVEN_A},
        {"th5.2-even-b", TheoremId::TH52_EVEN_B},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown theorem id: " + name);
    return it->second;
}

RealBound threshold(TheoremId id, const FormParams& p) {
    i64 a = p.a, b = p.b;
    switch (id) {
        case TheoremId::TH11: {
            require_standing(p);
            require(p.ab_odd(), "th1.1 requires odd a and b");
            require(p.coprime(), "th1.1 requires gcd(a,b)=1");
            RealBound d = bound_th21(a, b);
            return RealBound::radical(d.p(), d.q(), d.r(), 2);  // half the doubled bound
        }
        case TheoremId::TH12_ODD:
            require(a % 2 == 0, "th1.2 requires even a");
            [[fallthrough]];
        case TheoremId::TH21:
        case TheoremId::TH13:
            require_standing(p);
            if (id == TheoremId::TH13) require(b % 2 == 0, "th1.3 requires even b");
            require(p.coprime(), "requires gcd(a,b)=1");
            return bound_th21(a, b);
        case TheoremId::TH12_EVEN_QUARTER:
        case TheoremId::TH22:
            require_standing(p);
            require(a % 2 == 0, "th2.2 requires even a");
            require(p.coprime(), "requires gcd(a,b)=1");
            return bound_th22(a, b);
        case TheoremId::TH2:
            require_standing(p);
            require(p.coprime5(), "th2 requires gcd(a,5b)=1");
            return bound_th2(a, b, false);
        case TheoremId::COR2:
            require_standing(p);
            require(p.ab_odd(), "cor2 requires odd a and b");
            require(p.coprime5(), "cor2 requires gcd(a,5b)=1");
            return bound_th2(a, b, true);
        case TheoremId::TH3:
            require_standing(p);
            require(p.coprime(), "th3 requires gcd(a,b)=1");
            return bound_th3(a, b, true);
        case TheoremId::COR19:
            require_standing(p);
            require(p.ab_odd(), "cor1.9 requires odd a and b");
            require(p.coprime(), "cor1.9 requires gcd(a,b)=1");
            return bound_th3(a, b, false);
        case TheoremId::TH51:
            require(p.ab_odd() && a > b && b >= 0, "th5.1 requires odd a > b >= 0");
            require(p.coprime(), "th5.1 requires gcd(a,b)=1");
            return RealBound::rational(checked_add(checked_mul(checked_mul(a, a), a),
                                                   checked_mul(2 * a, b)),
                                       2);
        case TheoremId::TH52_EVEN_A:
            // Th5.2(i)'s bound depends on n's parity; this is the even-n
            // (worst) case 4a^3 + 4ab. Odd n needs only a^3 + 2ab.
            require(a % 2 == 0 && a > b && b > 0, "th5.2(i) requires even a > b > 0");
            require(p.coprime(), "th5.2 requires gcd(a,b)=1");
            return RealBound::integer(
                checked_mul(4, checked_add(checked_mul(checked_mul(a, a), a), checked_mul(a, b))));
        case TheoremId::TH52_EVEN_B:
            require(b % 2 == 0 && a > b && b > 0, "th5.2(ii) requires even b, a > b > 0");
            require(p.coprime(), "th5.2 requires gcd(a,b)=1");
            return RealBound::integer(checked_add(checked_mul(checked_mul(a, a), a),
                                                  checked_mul(2 * a, b)));
    }
    throw std::logic_error("threshold: unreachable");
}

bool n_meets_threshold(TheoremId id, const FormParams& params, i64 n) {
    RealBound bound = threshold(id, params);
    switch (id) {
        case TheoremId::TH2:
        case TheoremId::COR2:
        case TheoremId::TH52_EVEN_A:
        case TheoremId::TH52_EVEN_B:
            return bound.compare_to_int(n) <= 0;  // n >= bound
        case TheoremId::TH12_EVEN_QUARTER:
        case TheoremId::TH22:
            return bound.scaled(4).compare_to_int(n) < 0;  // n/4 > bound
        case TheoremId::TH3:
            return bound.scaled(6).compare_to_int(n) < 0;  // n/6 > bound
        case TheoremId::COR19:
            return bound.scaled(3).compare_to_int(n) < 0;  // n/3 > bound
        default:
            return bound.compare_to_int(n) < 0;  // n > bound
    }
}

i64 least_n_meeting(TheoremId id, const FormParams& params) {
    RealBound bound = threshold(id, params);
    switch (id) {
        case TheoremId::TH2:
        case TheoremId::COR2:
        case TheoremId::TH52_EVEN_A:
        case TheoremId::TH52_EVEN_B:
            return bound.least_integer_at_least();
        case TheoremId::TH12_EVEN_QUARTER:
        case TheoremId::TH22:
            return bound.scaled(4).least_integer_above();
        case TheoremId::TH3:
            return bound.scaled(6).least_integer_above();
        case TheoremId::COR19:
            return bound.scaled(3).least_integer_above();
        default:
            return bound.least_integer_above();
    }
}

}  // namespace quadrep
