#include <doctest.h>

#include "quadrep/verify.hpp"

using namespace quadrep;

TEST_CASE("registry loads and carries the expected ids") {
    // drift check between the registry file and the checks wired in code
    const char* required[] = {
        "p5bar_quad", "p5_quad", "S_7_1", "S_7_3", "S_7_5", "S_9_1", "S_9_5", "S_9_7",
        "T_4_1", "T_5_2_non4", "T_5_4_non4", "cor2_2p5bar", "cor_2w2wm1", "cor19_3p5bar",
        "cor41_3w4w1_z", "cor19_ii_5_1_z", "cor19_iii_7_1_z", "cor19_iii_7_3_z",
        "thr_5_1_h_N", "thr_5_m1_h_N", "thr_p7bar", "thr_p7_quad", "thr_4_1_u_N",
        "thr_4_m1_u_N", "thr_2w2w1", "thr_cor41_4m1", "thr_cor41_41", "thr_cor19_5m1",
        "thr_cor19_51", "thr_T_6_1", "thr_T_6_5",
        "conj51_5_2_mult4", "conj52_p5_3fold", "conj52_p5bar_3fold", "conj52_p6_3fold",
        "conj52_p6bar_3fold", "conj53_i", "conj53_ii_unique", "conj54_3fold_51_z",
        "conj54_mix_1", "conj54_mix_2", "conj54_mix_3", "conj55_mixed_pm1",
        "conj56_N1", "conj56_Nm1", "conj56_N3", "conj56_Nm3", "conj_p7_123", "conj_p7_125",
        "ws_th11_5_1", "ws_th21_5_1", "ws_th22_2_1", "ws_th2_2_m1", "ws_th3_3_1",
        "ws_cor2_3_1", "ws_cor19_5_1", "ws_th51_5_1", "ws_th52a_2_1", "ws_th52b_3_2",
    };
    for (const char* id : required) {
        INFO(id);
        CHECK_NOTHROW(find_claim(id));
    }
    CHECK_THROWS_AS(find_claim("no_such_claim"), std::invalid_argument);
    // golden data stays in the data file, never in code
    const Claim& c = find_claim("S_9_1");
    CHECK(c.expected_exceptions == std::vector<i64>{1, 2, 3, 6, 7, 11, 35, 37});
    CHECK(c.kind == ClaimKind::ExceptionSet);
    CHECK(!c.source.empty());
}

TEST_CASE("confirmed exception set with spot checks") {
    Report r = verify_claim("S_7_1", 20000);
    CHECK(r.verdict == "confirmed");
    CHECK(r.limit == 20000);
    auto spots = r.evidence["spot_checks"];
    REQUIRE(spots.size() == 5);
    for (const auto& s : spots) {
        auto prob = *find_claim("S_7_1").problem;
        std::vector<i64> xs = s["tuple"].get<std::vector<i64>>();
        CHECK(prob.evaluate(xs) == i128(s["n"].get<i64>()));
    }
}

TEST_CASE("registry catches the T(5,2) discrepancy with a counterexample") {
    Report r = verify_claim("T_5_2_non4", 20000);
    CHECK(r.verdict == "refuted");
    CHECK(r.evidence["counterexample"].get<i64>() == 15);
}

TEST_CASE("threshold claims") {
    Report r = verify_claim("thr_5_1_h_N", 50000);
    CHECK(r.verdict == "confirmed");
    CHECK(r.evidence["observed_max_nonrepresentable"].get<i64>() == 775);
    Report low = verify_claim("thr_5_1_h_N", 500);
    CHECK(low.verdict == "inconclusive");
}

TEST_CASE("conjecture checks") {
    CHECK_THROWS_AS(check_conjecture("S_7_1", 1000), std::invalid_argument);
    Report r = check_conjecture("conj54_3fold_51_z", 20000);
    CHECK(r.verdict == "consistent");
    Report u = check_conjecture("conj53_ii_unique", 2000);
    CHECK(u.verdict == "consistent");
    CHECK(u.evidence["computed_unique_set"].get<std::vector<i64>>() ==
          std::vector<i64>{0, 2, 3, 5, 7, 14, 16, 19, 37, 43, 58, 61, 79});
    Report m4 = check_conjecture("conj51_5_2_mult4", 20000);
    CHECK(m4.verdict == "inconclusive");
    CHECK(m4.evidence["missing_multiples_of_4"].get<i64>() > 0);
    Report tiny = check_conjecture("conj56_N1", 1000);
    CHECK(tiny.verdict == "inconclusive");  // below the claim's minimum limit
}

TEST_CASE("witness sweep claims run through verify") {
    Report r = verify_claim("ws_th21_1_1");
    CHECK(r.verdict == "confirmed");
    CHECK(r.evidence["failures"].get<i64>() == 0);
    CHECK(r.evidence["checked"].get<i64>() > 2000);
}

TEST_CASE("report serialization stays canonical") {
    Report r = verify_claim("S_7_5", 10000);
    json j = report_to_json(r);
    CHECK(j.contains("id"));
    CHECK(j.contains("verdict"));
    CHECK(j.contains("evidence"));
    CHECK(j.contains("paper_locus"));
    CHECK(!j.contains("wall_ms"));  // timings only on request, reports stay byte-stable
    json jt = report_to_json(r, true);
    CHECK(jt.contains("wall_ms"));

    auto csv = reports_to_csv({r});
    CHECK(csv.rfind("id,kind,verdict,limit,detail\n", 0) == 0);
}

TEST_CASE("runs are deterministic and thread-count independent") {
    std::vector<std::string> ids = {"S_7_1", "T_5_2_non4", "thr_T_6_1", "conj54_mix_3"};
    auto a = run_claims(ids, 20000, {1, false});
    auto b = run_claims(ids, 20000, {4, false});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(report_to_json(a[i]).dump() == report_to_json(b[i]).dump());
}

TEST_CASE("claims can be parsed from external json") {
    auto claims = parse_claims(R"({"claims":[{"id":"tmp","kind":"threshold",
        "problem":{"a":5,"b":1,"halved":true,"domain":"N","coeffs":[1,1,1,1]},
        "expected_threshold":775,"threshold_mode":"equals","min_limit":1000,
        "source":"x"}]})");
    REQUIRE(claims.size() == 1);
    CHECK(claims[0].expected_threshold == 775);
    CHECK_THROWS(parse_claims(R"({"claims":[{"id":"a","kind":"bogus"}]})"));
}
