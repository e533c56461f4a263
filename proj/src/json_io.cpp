#include "quadrep/json_io.hpp"

namespace quadrep {

json to_json(const Term& t) {
    return json{{"a", t.params.a}, {"b", t.params.b}, {"coeff", t.coeff}, {"halved", t.halved}};
}

json to_json(const RepProblem& p) {
    json terms = json::array();
    for (const Term& t : p.terms) terms.push_back(to_json(t));
    return json{{"domain", p.domain == Domain::N ? "N" : "Z"}, {"terms", std::move(terms)}};
}

json to_json(const IntervalSpec& spec) {
    return json{{"id", interval_name(spec.id)},
                {"lo", spec.lo.to_string()},
                {"hi", spec.hi.to_string()},
                {"lo_open", spec.lo_open},
                {"hi_open", spec.hi_open}};
}

json to_json(const WitnessTrace& tr) {
    json j{{"theorem", theorem_name(tr.theorem)},
           {"a", tr.params.a},
           {"b", tr.params.b},
           {"n", tr.n},
           {"case", tr.case_label},
           {tr.theorem == TheoremId::TH2 || tr.theorem == TheoremId::COR2 ? "B" : "d", tr.selected},
           {tr.theorem == TheoremId::TH2 || tr.theorem == TheoremId::COR2 ? "m" : "c", tr.derived}};
    if (tr.delta) j["delta"] = *tr.delta;
    j["interval"] = to_json(tr.window);
    j["inner"] = tr.inner;
    j["tuple"] = tr.witness.v;
    j["domain"] = tr.witness.domain == Domain::N ? "N" : "Z";
    j["problem"] = to_json(tr.problem);
    j["verified"] = tr.verify();
    return j;
}

Term term_from_json(const json& j) {
    return Term(FormParams(j.at("a").get<i64>(), j.at("b").get<i64>()),
                j.value("coeff", i64(1)), j.value("halved", false));
}

RepProblem problem_from_json(const json& j) {
    Domain dom = j.at("domain").get<std::string>() == "Z" ? Domain::Z : Domain::N;
    std::vector<Term> terms;
    if (j.contains("terms")) {
        for (const auto& t : j.at("terms")) terms.push_back(term_from_json(t));
        return RepProblem(std::move(terms), dom);
    }
    // shorthand: {a, b, halved, coeffs: [k,1,1,1] or lead integer}
    FormParams p(j.at("a").get<i64>(), j.at("b").get<i64>());
    bool halved = j.value("halved", false);
    i64 lead = 1;
    if (j.contains("coeffs")) {
        auto cs = j.at("coeffs");
        if (cs.is_array()) {
            for (const auto& c : cs) terms.emplace_back(p, c.get<i64>(), halved);
            return RepProblem(std::move(terms), dom);
        }
        lead = cs.get<i64>();
    }
    return RepProblem::quad(p, lead, halved, dom);
}

CheckPayload check_payload_from_json(const json& j) {
    CheckPayload out{problem_from_json(j.at("problem")), {0, 0, 0, 0}, j.at("n").get<i64>()};
    auto t = j.at("tuple");
    if (!t.is_array() || t.size() != out.problem.terms.size())
        throw std::invalid_argument("check payload: tuple arity mismatch");
    for (size_t i = 0; i < 4 && i < t.size(); ++i) out.tuple[i] = t[i].get<i64>();
    return out;
}

}  // namespace quadrep
