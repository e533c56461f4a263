#include <doctest.h>

#include <cmath>
#include <random>

#include "quadrep/forms.hpp"
#include "quadrep/intervals.hpp"
#include "quadrep/real_bound.hpp"
#include "quadrep/thresholds.hpp"

using namespace quadrep;

TEST_CASE("eval_form basics") {
    CHECK(eval_form(FormParams(5, 1), true, 3) == 24);
    CHECK(eval_form(FormParams(5, 1), true, -2) == 9);
    CHECK(eval_form(FormParams(3, 1), true, 2) == 7);  // second pentagonal at 2
    CHECK(eval_form(FormParams(3, 1), false, 2) == 14);
    CHECK_THROWS_AS(eval_form(FormParams(2, 1), true, 1), std::invalid_argument);
}

TEST_CASE("eval_form is exact at the documented envelope") {
    const i64 big_x = i64(1) << 30;
    FormParams p(1 << 10, 1 << 10);
    i128 expected = (i128(1) << 70) + (i128(1) << 40);  // x*(a*x + b)
    CHECK(eval_form(p, false, big_x) == expected);
    CHECK(eval_form(p, true, big_x) == expected / 2);
}

TEST_CASE("eval_form equals a*x^2 + b*x") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        i64 a = i64(rng() % 50) + 1;
        i64 b = i64(rng() % 99) - 49;
        if (b < -a) b = -a;
        i64 x = i64(rng() % 2001) - 1000;
        i128 direct = i128(a) * x * x + i128(b) * x;
        CHECK(eval_form(FormParams(a, b), false, x) == direct);
    }
}

TEST_CASE("polygonal parameterizations") {
    auto [p5s, h5] = polygonal_params({5, PolygonalVariant::Second});
    CHECK(p5s == FormParams(3, 1));
    CHECK(h5);
    CHECK(eval_form(p5s, true, 1) == 2);

    auto [p4, h4] = polygonal_params({4, PolygonalVariant::Standard});
    CHECK(p4 == FormParams(2, 0));
    for (i64 x = 0; x <= 20; ++x) CHECK(eval_form(p4, h4, x) == i128(x) * x);

    auto [p8, h8] = polygonal_params({8, PolygonalVariant::Standard});
    CHECK(p8 == FormParams(6, -4));
    for (i64 x = 0; x <= 20; ++x) CHECK(eval_form(p8, h8, x) == i128(x) * (3 * x - 2));

    CHECK_THROWS_AS(polygonal_params({2, PolygonalVariant::Standard}), std::invalid_argument);
}

TEST_CASE("polygonal round trip against the closed forms") {
    for (i64 m = 3; m <= 12; ++m) {
        auto [ps, hs] = polygonal_params({m, PolygonalVariant::Standard});
        auto [pb, hb] = polygonal_params({m, PolygonalVariant::Second});
        for (i64 n = 0; n <= 100; ++n) {
            i128 pm = i128(m - 2) * n * (n - 1) / 2 + n;
            CHECK(eval_form(ps, hs, n) == pm);
            // second kind is the standard one at -n
            CHECK(eval_form(pb, hb, n) == eval_form(ps, hs, -n));
        }
    }
    // table forms
    for (i64 x = -10; x <= 10; ++x) {
        CHECK(eval_form(polygonal_params({5, PolygonalVariant::Generalized}).first, true, x) ==
              i128(x) * (3 * x - 1) / 2);
        CHECK(eval_form(polygonal_params({7, PolygonalVariant::Generalized}).first, true, x) ==
              i128(x) * (5 * x - 3) / 2);
    }
}

TEST_CASE("RealBound comparisons are exact") {
    RealBound b = RealBound::radical(7, 3, 6);  // 7 + 3*sqrt(6) ~ 14.3485
    CHECK(b.compare_to_int(14) > 0);
    CHECK(b.compare_to_int(15) < 0);
    CHECK(b.least_integer_above() == 15);
    CHECK(b.least_integer_at_least() == 15);

    RealBound seven = RealBound::integer(7);
    CHECK(seven.compare_to_int(7) == 0);
    CHECK(seven.least_integer_above() == 8);
    CHECK(seven.least_integer_at_least() == 7);

    // perfect squares fold away: 3 + 2*sqrt(9) = 9
    RealBound folded = RealBound::radical(3, 2, 9);
    CHECK(folded.is_rational());
    CHECK(folded.compare_to_int(9) == 0);

    // equal values with distinct radicands: 2*sqrt(2) = sqrt(8)
    CHECK(RealBound::radical(0, 2, 2).compare(RealBound::radical(0, 1, 8)) == 0);
    CHECK(RealBound::radical(0, 2, 2).compare(RealBound::radical(0, 1, 7)) > 0);
    CHECK(RealBound::radical(1, 1, 2).compare(RealBound::radical(0, 1, 6)) < 0);

    // halves: (27 + 6)/2 = 16.5
    RealBound th51 = RealBound::rational(33, 2);
    CHECK(th51.compare_to_int(16) > 0);
    CHECK(th51.compare_to_int(17) < 0);
    CHECK(th51.least_integer_above() == 17);
}

TEST_CASE("RealBound agrees with long-double evaluation away from ties") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int i = 0; checked < 100000 && i < 400000; ++i) {
        i64 p = i64(rng() % 20001) - 10000;
        i64 q = i64(rng() % 1000);
        i64 r = i64(rng() % 5000);
        i64 den = i64(rng() % 12) + 1;
        i64 k = i64(rng() % 4001) - 2000;
        long double v = (static_cast<long double>(p) +
                         static_cast<long double>(q) * sqrtl(static_cast<long double>(r))) /
                        static_cast<long double>(den);
        long double margin = v - static_cast<long double>(k);
        if (fabsl(margin) < 1e-6L) continue;
        ++checked;
        int expect = margin > 0 ? 1 : -1;
        CHECK(RealBound::radical(p, q, r, den).compare_to_int(k) == expect);
    }
    CHECK(checked == 100000);
}

TEST_CASE("threshold formula values") {
    CHECK(threshold(TheoremId::TH11, FormParams(1, 1)).to_string() == "7 + 3*sqrt(6)");
    CHECK(threshold(TheoremId::TH11, FormParams(5, 1)).to_string() == "1443 + 91*sqrt(246)");
    CHECK(least_n_meeting(TheoremId::TH11, FormParams(1, 1)) == 15);
    CHECK(least_n_meeting(TheoremId::TH11, FormParams(5, 1)) == 2871);
    CHECK(threshold(TheoremId::TH21, FormParams(5, 1)).to_string() == "2886 + 182*sqrt(246)");
    // th2.1's bound doubles th1.1's exactly
    CHECK(threshold(TheoremId::TH21, FormParams(5, 1))
              .compare(threshold(TheoremId::TH11, FormParams(5, 1)).scaled(2)) == 0);
    CHECK(least_n_meeting(TheoremId::TH2, FormParams(2, -1)) == 524712);
    CHECK(least_n_meeting(TheoremId::TH22, FormParams(2, 1)) == 1457);  // least n with n/4 above 183+29*sqrt(39)
    CHECK(least_n_meeting(TheoremId::TH3, FormParams(1, 1)) == 6720);
    CHECK(least_n_meeting(TheoremId::COR19, FormParams(5, 1)) == 435695);
    CHECK(n_meets_threshold(TheoremId::TH51, FormParams(3, 1), 17));
    CHECK(!n_meets_threshold(TheoremId::TH51, FormParams(3, 1), 16));
    // cor2's bound is half of th2's
    CHECK(threshold(TheoremId::COR2, FormParams(3, 1)).scaled(2)
              .compare(threshold(TheoremId::TH2, FormParams(3, 1))) == 0);
    CHECK_THROWS_AS(threshold(TheoremId::TH2, FormParams(5, 1)), std::invalid_argument);
    CHECK_THROWS_AS(threshold(TheoremId::TH11, FormParams(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(threshold(TheoremId::TH22, FormParams(3, 1)), std::invalid_argument);
    CHECK(theorem_from_name("th1.1") == TheoremId::TH11);
    CHECK(theorem_name(theorem_from_name("th5.2-even-b")) == "th5.2-even-b");
}

TEST_CASE("interval I membership matches the integer inequality") {
    IntervalSpec I = interval(IntervalId::I, FormParams(5, 1), 5742);
    CHECK(I.lo_open);
    CHECK(I.hi_open);
    // (10*58+13)^2 = 351649 > 344289 = 12*5*5738 + 9
    CHECK(I.contains(58));
    CHECK(!I.contains(57));  // 583^2 = 339889 < 344289
    CHECK(I.contains(67));
    CHECK(!I.contains(68));
    CHECK(I.least_integer_inside() == 58);
    CHECK(I.length_exceeds(10));  // length ~ 10.001 > 2a
}

TEST_CASE("interval J and K endpoints") {
    IntervalSpec J = interval(IntervalId::J, FormParams(1, 0), 65864);
    CHECK(!J.lo_open);
    CHECK(!J.hi_open);
    // [sqrt(24n)/12, sqrt(4n/5)/2] ~ [104.78, 114.77]
    CHECK(J.contains(105));
    CHECK(!J.contains(104));
    CHECK(J.contains(114));
    CHECK(!J.contains(115));
    CHECK(J.length_at_least(10));

    IntervalSpec K = interval(IntervalId::K, FormParams(1, 1), 6720);
    CHECK(K.contains(180));
    CHECK(!K.contains(179));
    CHECK(K.contains(197));
    CHECK(!K.contains(198));
    CHECK(K.least_integer_inside() == 180);

    CHECK_THROWS_AS(interval(IntervalId::I, FormParams(3, 1), 1), std::domain_error);
}

TEST_CASE("interval length claims just above each bound") {
    for (auto [a, b] : {std::pair<i64, i64>{5, 1}, {3, 1}, {2, 1}, {1, 2}, {2, -1}}) {
        FormParams p(a, b);
        i64 n0 = least_n_meeting(TheoremId::TH21, p);
        for (i64 n = n0; n < n0 + 4; ++n)
            CHECK(interval(IntervalId::I, p, n).length_exceeds(2 * a));
    }
    for (auto [a, b] : {std::pair<i64, i64>{2, 1}, {4, 1}, {2, -1}}) {
        FormParams p(a, b);
        i64 n0 = least_n_meeting(TheoremId::TH22, p);
        for (i64 n = n0; n < n0 + 4; ++n)
            if (n % 2 == 0) CHECK(interval(IntervalId::I, p, n).length_exceeds(4 * a));
    }
    for (auto [a, b] : {std::pair<i64, i64>{1, 1}, {3, 1}, {2, -1}, {1, 0}}) {
        FormParams p(a, b);
        i64 n0 = least_n_meeting(TheoremId::TH2, p);
        for (i64 n = n0; n < n0 + 4; ++n)
            CHECK(interval(IntervalId::J, p, n).length_at_least(10 * a));
    }
    for (auto [a, b] : {std::pair<i64, i64>{1, 1}, {3, 1}, {2, -1}}) {
        FormParams p(a, b);
        i64 n0 = least_n_meeting(TheoremId::TH3, p);
        for (i64 n = n0; n < n0 + 4; ++n)
            CHECK(interval(IntervalId::K, p, n).length_exceeds(18 * a));
    }
}

namespace {

// the lemmas' window conditions, straight off their statements
bool lemma22_lhs(i64 d, i64 c) { return d > 2 && d * d < 4 * c && 3 * c < d * d + 2 * d + 4; }
bool lem3cd_lhs(i64 d, i64 c) { return d >= 3 && d * d < 6 * c && 5 * c < d * d + 2 * d + 6; }

}  // namespace

TEST_CASE("window equivalences on their sound ranges") {
    // biconditional from n >= 4a+2b (window I) resp. n >= ceil(14a/5+2b) (window K);
    // the d > 2 direction of the I-window claim genuinely fails below 4a+2b
    for (i64 a = 1; a <= 6; ++a) {
        for (i64 b = -a + 1; b <= 5; ++b) {
            FormParams p(a, b);
            for (i64 n = std::max(2 * a, 4 * a + 2 * b); n <= 1200; ++n) {
                IntervalSpec I = interval(IntervalId::I, p, n);
                i64 dmax = I.hi.least_integer_above() + 2;
                for (i64 d = -4; d <= dmax; ++d) {
                    if (mod_floor(n - b * d, a) != 0) continue;
                    i64 c = (n - b * d) / a;
                    CHECK(lemma22_lhs(d, c) == I.contains(d));
                }
            }
            i64 k0 = (14 * a + 5 * 2 * b + 4) / 5;  // ceil(14a/5 + 2b)
            for (i64 n = std::max<i64>(k0, 0); n <= 1200; ++n) {
                IntervalSpec K = interval(IntervalId::K, p, n);
                i64 dmax = K.hi.least_integer_above() + 2;
                for (i64 d = -4; d <= dmax; ++d) {
                    if (mod_floor(n - b * d, a) != 0) continue;
                    i64 c = (n - b * d) / a;
                    CHECK(lem3cd_lhs(d, c) == K.contains(d));
                }
            }
        }
    }
}

TEST_CASE("window implication holds everywhere from n >= 2a") {
    // lhs => d in I needs no extra hypothesis; the converse has small-n
    // counterexamples, pinned below
    for (i64 a = 1; a <= 6; ++a)
        for (i64 b = -a + 1; b <= 5; ++b)
            for (i64 n = 2 * a; n <= 400; ++n) {
                FormParams p(a, b);
                IntervalSpec I = interval(IntervalId::I, p, n);
                for (i64 d = 3; d <= 60; ++d) {
                    if (mod_floor(n - b * d, a) != 0) continue;
                    i64 c = (n - b * d) / a;
                    if (lemma22_lhs(d, c)) CHECK(I.contains(d));
                }
            }
    // boundary counterexample to the full biconditional at n = 2a
    IntervalSpec I = interval(IntervalId::I, FormParams(1, 0), 2);
    CHECK(I.contains(1));
    CHECK(!lemma22_lhs(1, 2));
}
