#include <doctest.h>

#include "quadrep/json_io.hpp"
#include "quadrep/sieve.hpp"
#include "quadrep/verify.hpp"
#include "quadrep/witness.hpp"

using namespace quadrep;

TEST_CASE("unhalved construction replays") {
    WitnessTrace tr = witness_unhalved(FormParams(5, 1), 5742);
    CHECK(tr.selected == 67);
    CHECK(tr.derived == 1135);
    CHECK(tr.witness.v == std::array<i64, 4>{14, 17, 17, 19});
    CHECK(tr.case_label == "case 1: ab odd, n even");
    CHECK(tr.verify());
    CHECK(5 * 1135 + 67 == 5742);

    WitnessTrace c2 = witness_unhalved(FormParams(2, 1), 287);  // least odd n above the bound
    CHECK(c2.selected == 21);
    CHECK(c2.derived == 133);
    CHECK(c2.witness.v == std::array<i64, 4>{2, 4, 7, 8});

    WitnessTrace c3 = witness_unhalved(FormParams(1, 2), 54);  // n = 2 (mod 4) branch
    CHECK(c3.selected == 10);
    CHECK(c3.derived == 34);
    CHECK(c3.derived % 4 == 2);
    CHECK(c3.witness.v == std::array<i64, 4>{0, 3, 3, 4});
}

TEST_CASE("unhalved rejects bad hypotheses") {
    CHECK_THROWS_AS(witness_unhalved(FormParams(5, 1), 5741), std::invalid_argument);  // odd n
    CHECK_THROWS_AS(witness_unhalved(FormParams(5, 1), 100), std::invalid_argument);   // below bound
    CHECK_THROWS_AS(witness_unhalved(FormParams(1, 2), 56), std::invalid_argument);    // 4 | n
    CHECK_THROWS_AS(witness_unhalved(FormParams(4, 2), 5742), std::invalid_argument);  // gcd
}

TEST_CASE("halved construction") {
    WitnessTrace tr = witness_halved(FormParams(5, 1), 2871);
    CHECK(tr.n == 2871);
    CHECK(tr.witness.v == std::array<i64, 4>{14, 17, 17, 19});
    CHECK(tr.verify());

    WitnessTrace tiny = witness_halved(FormParams(1, 1), 15);
    CHECK(tiny.witness.v == std::array<i64, 4>{2, 2, 2, 3});  // 3+3+3+6 triangulars
    CHECK(tiny.verify());

    WitnessTrace least31 = witness_halved(FormParams(3, 1), least_n_meeting(TheoremId::TH11, FormParams(3, 1)));
    CHECK(least31.verify());

    CHECK_THROWS_AS(witness_halved(FormParams(2, 1), 5000), std::invalid_argument);
    CHECK_THROWS_AS(witness_halved(FormParams(1, 1), 14), std::invalid_argument);
}

TEST_CASE("even quarter construction") {
    WitnessTrace a = witness_even_quarter(FormParams(2, 1), 1460);
    CHECK(a.selected == 48);
    CHECK(a.derived == 706);
    CHECK(a.witness.v == std::array<i64, 4>{4, 11, 13, 20});
    WitnessTrace b = witness_even_quarter(FormParams(4, 1), 12728);
    CHECK(b.selected == 112);
    CHECK(b.derived == 3154);
    CHECK(b.witness.v == std::array<i64, 4>{25, 27, 30, 30});
    WitnessTrace c = witness_even_quarter(FormParams(2, -1), 1252);
    CHECK(c.selected == 48);
    CHECK(c.derived == 650);
    CHECK(c.witness.v == std::array<i64, 4>{5, 12, 15, 16});
    CHECK_THROWS_AS(witness_even_quarter(FormParams(2, 1), 1461), std::invalid_argument);
    CHECK_THROWS_AS(witness_even_quarter(FormParams(3, 1), 1460), std::invalid_argument);
}

TEST_CASE("weighted-2 construction replays") {
    WitnessTrace a = witness_weighted2(FormParams(1, 0), 65864);
    CHECK(a.selected == 106);
    CHECK(a.derived == 9684);
    CHECK(!a.delta.has_value());
    CHECK(a.witness.v == std::array<i64, 4>{151, 109, 34, 85});
    CHECK(a.verify());

    WitnessTrace b = witness_weighted2(FormParams(2, -1), 524712);
    CHECK(b.selected == 212);
    CHECK(b.derived == 38166);
    CHECK(b.witness.v == std::array<i64, 4>{289, 212, 50, 220});

    WitnessTrace c = witness_weighted2(FormParams(3, 1), 1781606);
    CHECK(c.selected == 316);
    CHECK(c.witness.v == std::array<i64, 4>{453, 318, 82, 274});

    // 5 | n exercises the delta twist; the residual must dodge E
    WitnessTrace d = witness_weighted2(FormParams(1, 0), 65865);
    CHECK(d.delta.has_value());
    CHECK(!in_E(d.derived));
    CHECK(d.verify());

    CHECK_THROWS_AS(witness_weighted2(FormParams(5, 1), 6000000), std::invalid_argument);  // gcd(a,5b)
    CHECK_THROWS_AS(witness_weighted2(FormParams(1, 0), 65863), std::invalid_argument);    // just below bound
}

TEST_CASE("weighted-2 halved corollary") {
    i64 n = least_n_meeting(TheoremId::COR2, FormParams(3, 1));
    CHECK(n == 890803);
    WitnessTrace tr = witness_weighted2_halved(FormParams(3, 1), n);
    CHECK(tr.n == n);
    CHECK(tr.verify());
    CHECK(tr.problem.terms[0].halved == false);
    CHECK(tr.problem.terms[1].halved == true);
    CHECK_THROWS_AS(witness_weighted2_halved(FormParams(2, 1), 1000000), std::invalid_argument);
}

TEST_CASE("weighted-3 construction replays") {
    WitnessTrace a = witness_weighted3(FormParams(1, 1), 6720);
    CHECK(a.selected == 182);
    CHECK(a.derived == 6538);
    CHECK(a.witness.v == std::array<i64, 4>{38, 3, 26, 39});
    CHECK(a.case_label.substr(0, 6) == "case 1");

    // 3 | a and 3 | n goes through the mod-9 adjustment
    WitnessTrace b = witness_weighted3(FormParams(3, 1), 186156);
    CHECK(b.case_label.substr(0, 6) == "case 2");
    CHECK(b.selected == 576);
    CHECK(b.derived == 61860);
    CHECK(mod_floor(b.derived, 9) == 3);
    CHECK(b.witness.v == std::array<i64, 4>{107, 23, 110, 122});

    CHECK_THROWS_AS(witness_weighted3(FormParams(1, 1), 6721), std::invalid_argument);  // odd n, odd ab
    CHECK_THROWS_AS(witness_weighted3(FormParams(1, 1), 6718), std::invalid_argument);  // below bound
}

TEST_CASE("weighted-3 halved corollary") {
    i64 n = least_n_meeting(TheoremId::COR19, FormParams(5, 1));
    CHECK(n == 435695);
    WitnessTrace tr = witness_weighted3_halved(FormParams(5, 1), n);
    CHECK(tr.verify());
    CHECK(tr.problem.terms[0].coeff == 3);
    CHECK(tr.problem.terms[0].halved);
    CHECK_THROWS_AS(witness_weighted3_halved(FormParams(2, 1), 100000), std::invalid_argument);
}

TEST_CASE("integer-domain construction") {
    WitnessTrace a = witness_integers(FormParams(3, 1), 15);
    CHECK(a.selected == 3);
    CHECK(a.derived == 9);
    CHECK(a.witness.v == std::array<i64, 4>{-1, 0, 2, 2});
    CHECK(a.witness.domain == Domain::Z);
    CHECK(a.verify());

    WitnessTrace b = witness_integers(FormParams(2, 1), 72);
    CHECK(b.selected == 4);
    CHECK(b.derived == 34);
    CHECK(b.witness.v == std::array<i64, 4>{-3, 0, 3, 4});
    CHECK(mod_floor(b.derived, 4) == 2);

    WitnessTrace c = witness_integers(FormParams(3, 2), 39);
    CHECK(c.selected == 3);
    CHECK(c.derived == 11);
    CHECK(c.witness.v == std::array<i64, 4>{-1, 0, 1, 3});

    CHECK_THROWS_AS(witness_integers(FormParams(1, 1), 50), std::invalid_argument);  // needs a > b
    CHECK_THROWS_AS(witness_integers(FormParams(3, 2), 40), std::invalid_argument);  // 4 | n
    CHECK_THROWS_AS(witness_integers(FormParams(3, 1), 1), std::invalid_argument);   // infeasible window
}

TEST_CASE("traces replay deterministically and serialize") {
    WitnessTrace a = witness_weighted2(FormParams(2, -1), 524712);
    WitnessTrace b = witness_weighted2(FormParams(2, -1), 524712);
    CHECK(a.witness.v == b.witness.v);
    CHECK(a.selected == b.selected);
    json ja = to_json(a);
    CHECK(ja["verified"].get<bool>());
    CHECK(ja["B"].get<i64>() == 212);
    CheckPayload payload = check_payload_from_json(ja);
    CHECK(payload.problem.check_witness(Witness{payload.tuple, payload.problem.domain}, payload.n));
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("short sweeps cover every constructor") {
    for (auto [id, a, b] : {std::tuple<TheoremId, i64, i64>{TheoremId::TH11, 5, 1},
                            {TheoremId::TH21, 2, 1},
                            {TheoremId::TH22, 2, -1},
                            {TheoremId::TH2, 1, 1},
                            {TheoremId::COR2, 1, 1},
                            {TheoremId::TH3, 1, 1},
                            {TheoremId::COR19, 1, 1},
                            {TheoremId::TH51, 3, 1},
                            {TheoremId::TH52_EVEN_A, 2, 1},
                            {TheoremId::TH52_EVEN_B, 3, 2}}) {
        SweepResult sr = run_witness_sweep(id, FormParams(a, b), 250);
        INFO(theorem_name(id));
        CHECK(sr.failures == 0);
        CHECK(sr.checked > 0);
    }
}
