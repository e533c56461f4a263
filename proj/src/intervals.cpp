#include "quadrep/intervals.hpp"

namespace quadrep {

bool IntervalSpec::contains(i64 d) const {
    int cl = lo.compare_to_int(d);  // sign(lo - d)
    if (lo_open ? cl >= 0 : cl > 0) return false;
    int ch = hi.compare_to_int(d);
    return hi_open ? ch > 0 : ch >= 0;
}

i64 IntervalSpec::least_integer_inside() const {
    return lo_open ? lo.least_integer_above() : lo.least_integer_at_least();
}

int IntervalSpec::compare_length_to(i64 len) const {
    return hi.compare(lo.plus_int(len));
}

namespace {

i64 radicand(i64 v, const char* which) {
    if (v < 0)
        throw std::domain_error(std::string("interval ") + which +
                                ": negative radicand, n far below the theorem's range");
    return v;
}

}  // namespace

IntervalSpec interval(IntervalId id, const FormParams& p, i64 n) {
    i64 a = p.a, b = p.b;
    switch (id) {
        case IntervalId::I: {
            // lo = (sqrt(12a(n-a+b)+9b^2) - 2a - 3b) / (2a)
            i64 X = radicand(
                checked_add(checked_mul(checked_mul(12, a), checked_sub(n, checked_sub(a, b))),
                            checked_mul(9, checked_mul(b, b))),
                "I");
            RealBound lo = RealBound::radical(-(2 * a + 3 * b), 1, X, 2 * a);
            // hi = (2 sqrt(an+b^2) - 2b) / a
            i64 Y = radicand(checked_add(checked_mul(a, n), checked_mul(b, b)), "I");
            RealBound hi = RealBound::radical(-2 * b, 2, Y, a);
            return {id, lo, hi, true, true};
        }
        case IntervalId::J: {
            i64 X = radicand(checked_add(checked_mul(checked_mul(24, a), n),
                                         checked_mul(25, checked_mul(b, b))),
                             "J");
            RealBound lo = RealBound::radical(-5 * b, 1, X, 12 * a);
            i64 Y = radicand(checked_add(checked_mul(checked_mul(20, a), n),
                                         checked_mul(25, checked_mul(b, b))),
                             "J");
            RealBound hi = RealBound::radical(-5 * b, 1, Y, 10 * a);
            return {id, lo, hi, false, false};
        }
        case IntervalId::K: {
            i64 X = radicand(
                checked_add(checked_mul(checked_mul(20, a), checked_sub(n, checked_sub(a, b))),
                            checked_mul(25, checked_mul(b, b))),
                "K");
            RealBound lo = RealBound::radical(-(2 * a + 5 * b), 1, X, 2 * a);
            i64 Y = radicand(checked_add(checked_mul(checked_mul(6, a), n),
                                         checked_mul(9, checked_mul(b, b))),
                             "K");
            RealBound hi = RealBound::radical(-3 * b, 1, Y, a);
            return {id, lo, hi, true, true};
        }
    }
    throw std::logic_error("interval: unreachable");
}

std::string interval_name(IntervalId id) {
    switch (id) {
        case IntervalId::I: return "I";
        case IntervalId::J: return "J";
        case IntervalId::K: return "K";
    }
    return "?";
}

i64 least_in_interval(const IntervalSpec& spec, i64 rep, i64 modulus) {
    i64 start = spec.least_integer_inside();
    i64 d = checked_add(start, mod_floor(rep - start, modulus));
    if (!spec.contains(d))
        throw std::runtime_error("no integer of the required congruence class in interval " +
                                 interval_name(spec.id) + " [rep=" + std::to_string(rep) +
                                 " mod=" + std::to_string(modulus) + ")");
    return d;
}

}  // namespace quadrep
