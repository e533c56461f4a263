#include "quadrep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

extern const char* const kClaimsJson;  // generated from data/claims.json

namespace quadrep {

namespace {

ClaimKind kind_from_string(const std::string& s) {
    if (s == "exception-set") return ClaimKind::ExceptionSet;
    if (s == "threshold") return ClaimKind::Threshold;
    if (s == "witness-sweep") return ClaimKind::WitnessSweep;
    if (s == "conjecture") return ClaimKind::Conjecture;
    throw std::invalid_argument("unknown claim kind: " + s);
}

ConjectureType ctype_from_string(const std::string& s) {
    if (s == "exception-set") return ConjectureType::ExceptionSet;
    if (s == "threshold") return ConjectureType::Threshold;
    if (s == "multiples-of-4") return ConjectureType::MultiplesOf4;
    if (s == "uniqueness") return ConjectureType::Uniqueness;
    throw std::invalid_argument("unknown conjecture type: " + s);
}

std::string kind_to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::ExceptionSet: return "exception-set";
        case ClaimKind::Threshold: return "threshold";
        case ClaimKind::WitnessSweep: return "witness-sweep";
        case ClaimKind::Conjecture: return "conjecture";
    }
    return "?";
}

std::vector<Claim>& registry_storage() {
    static std::vector<Claim> claims = parse_claims(kClaimsJson);
    return claims;
}

}  // namespace

std::vector<Claim> parse_claims(const std::string& json_text) {
    json doc = json::parse(json_text);
    std::vector<Claim> out;
    std::set<std::string> seen;
    for (const auto& j : doc.at("claims")) {
        Claim c;
        c.id = j.at("id").get<std::string>();
        if (!seen.insert(c.id).second) throw std::invalid_argument("duplicate claim id: " + c.id);
        c.kind = kind_from_string(j.at("kind").get<std::string>());
        if (j.contains("conjecture_type"))
            c.ctype = ctype_from_string(j.at("conjecture_type").get<std::string>());
        if (j.contains("problem")) c.problem = problem_from_json(j.at("problem"));
        if (j.contains("expected_exceptions"))
            c.expected_exceptions = j.at("expected_exceptions").get<std::vector<i64>>();
        c.non_mult4_only = j.value("non_mult4_only", false);
        if (j.contains("expected_threshold")) c.expected_threshold = j.at("expected_threshold").get<i64>();
        c.threshold_exact = j.value("threshold_mode", "equals") == std::string("equals");
        if (j.contains("expected_unique_set"))
            c.expected_unique_set = j.at("expected_unique_set").get<std::vector<i64>>();
        if (j.contains("theorem")) {
            c.theorem = theorem_from_name(j.at("theorem").get<std::string>());
            c.params = FormParams(j.at("a").get<i64>(), j.at("b").get<i64>());
            c.span = j.value("span", i64(5000));
        }
        c.min_limit = j.value("min_limit", i64(1000));
        c.source = j.value("source", std::string());
        out.push_back(std::move(c));
    }
    return out;
}

const std::vector<Claim>& claim_registry() { return registry_storage(); }

void override_registry(std::vector<Claim> claims) { registry_storage() = std::move(claims); }

const Claim& find_claim(const std::string& id) {
    for (const Claim& c : claim_registry())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown claim id: " + id);
}

namespace {

json exceptions_json(const std::vector<i64>& v) { return json(v); }

// deterministic spot checks: explicit tuples for a few representable n
json spot_check_tuples(const Claim& c, const RepSet& rs, i64 limit) {
    json out = json::array();
    u64 state = fnv1a(c.id);
    int found = 0;
    int guard = 0;
    while (found < 5 && guard++ < 200) {
        i64 n = i64(splitmix64(state) % u64(limit + 1));
        if (!rs.test(n)) continue;
        auto tuple = find_tuple(rs.problem(), n);
        if (!tuple) throw std::logic_error("sieve bit set but no tuple found for n=" + std::to_string(n));
        i128 v = rs.problem().evaluate(*tuple);
        if (v != i128(n)) throw std::logic_error("spot check tuple does not evaluate to n");
        out.push_back(json{{"n", n}, {"tuple", *tuple}});
        ++found;
    }
    return out;
}

Report make_report(const Claim& c, i64 limit) {
    Report r;
    r.id = c.id;
    r.kind = kind_to_string(c.kind);
    r.limit = limit;
    r.source = c.source;
    return r;
}

// confirmed-verdict word differs for conjecture-backed claims
const char* good_verdict(const Claim& c) {
    return c.kind == ClaimKind::Conjecture ? "consistent" : "confirmed";
}

Report check_exception_set(const Claim& c, i64 limit, const VerifyOptions& opts) {
    Report r = make_report(c, limit);
    RepSet rs = sieve_representable(*c.problem, limit, {10'000'000, opts.threads});
    auto computed = rs.exceptions(c.non_mult4_only);
    bool stable = rs.stable_tail(c.non_mult4_only);
    r.evidence["computed_exceptions"] = exceptions_json(computed);
    r.evidence["expected_exceptions"] = exceptions_json(c.expected_exceptions);
    r.evidence["stable_tail"] = stable;
    if (computed == c.expected_exceptions) {
        if (!stable) {
            r.verdict = "inconclusive";
            r.evidence["note"] = "expected list matches but the top 20% of the range is not exception-free";
            return r;
        }
        r.verdict = good_verdict(c);
        r.evidence["spot_checks"] = spot_check_tuples(c, rs, limit);
        return r;
    }
    // an expected exception that is representable refutes outright
    for (i64 e : c.expected_exceptions) {
        if (e <= limit && rs.test(e)) {
            r.verdict = "refuted";
            r.evidence["counterexample"] = e;
            r.evidence["note"] = "listed exception is representable";
            return r;
        }
    }
    // extra exceptions: conclusive only when the tail is stable
    std::vector<i64> extra;
    std::set<i64> expected(c.expected_exceptions.begin(), c.expected_exceptions.end());
    for (i64 e : computed)
        if (!expected.count(e)) extra.push_back(e);
    if (!extra.empty() && stable) {
        r.verdict = "refuted";
        r.evidence["counterexample"] = extra.front();
        r.evidence["note"] = "non-representable integer missing from the expected list";
        return r;
    }
    r.verdict = "inconclusive";
    r.evidence["note"] = "exception list still drifting at this limit";
    return r;
}

Report check_threshold(const Claim& c, i64 limit, const VerifyOptions& opts) {
    Report r = make_report(c, limit);
    RepSet rs = sieve_representable(*c.problem, limit, {10'000'000, opts.threads});
    i64 observed = rs.max_exception();
    bool stable = rs.stable_tail();
    r.evidence["observed_max_nonrepresentable"] = observed;
    r.evidence["expected"] = c.expected_threshold;
    r.evidence["mode"] = c.threshold_exact ? "equals" : "at_most";
    r.evidence["stable_tail"] = stable;
    if (!stable) {
        r.verdict = "inconclusive";
        return r;
    }
    if (observed > c.expected_threshold) {
        r.verdict = "refuted";
        r.evidence["counterexample"] = observed;  // non-representable above the claimed bound
    } else if (c.threshold_exact && observed != c.expected_threshold) {
        r.verdict = "refuted";
        r.evidence["counterexample"] = c.expected_threshold;
        r.evidence["note"] = "claimed largest non-representable integer is representable";
    } else {
        r.verdict = good_verdict(c);
    }
    return r;
}

Report check_multiples_of_4(const Claim& c, i64 limit, const VerifyOptions& opts) {
    Report r = make_report(c, limit);
    RepSet rs = sieve_representable(*c.problem, limit, {10'000'000, opts.threads});
    std::vector<i64> missing;
    for (i64 n = 4; n <= limit; n += 4)
        if (!rs.test(n)) missing.push_back(n);
    r.evidence["missing_multiples_of_4"] = i64(missing.size());
    json sample = json::array();
    for (size_t i = 0; i < missing.size() && i < 20; ++i) sample.push_back(missing[i]);
    r.evidence["first_missing"] = sample;
    if (!missing.empty()) r.evidence["largest_missing"] = missing.back();
    r.evidence["density_among_multiples_of_4"] =
        limit >= 4 ? double(missing.size()) / double(limit / 4) : 0.0;
    // finite sieving cannot decide an infinitude claim
    r.verdict = "inconclusive";
    r.evidence["note"] = "evidence only: infinitude is not decidable by finite sieving";
    return r;
}

Report check_uniqueness(const Claim& c, i64 limit, const VerifyOptions&) {
    Report r = make_report(c, limit);
    const RepProblem& prob = *c.problem;
    if (prob.terms.size() != 3 || !(prob.terms[1].params == prob.terms[2].params) ||
        prob.terms[1].coeff != prob.terms[2].coeff || prob.terms[1].halved != prob.terms[2].halved)
        throw std::invalid_argument("uniqueness check needs identical second and third terms");
    // count triples (x, y, z) with y <= z as arguments
    std::vector<u64> cnt(size_t(limit) + 1, 0);
    std::vector<std::pair<i64, i64>> yz;  // (value sum, multiplicity) of ordered pairs y <= z
    {
        const Term& t = prob.terms[1];
        std::vector<std::pair<i64, i64>> args;  // (arg, value)
        const i64 a = t.params.a, b = t.params.b;
        for (i64 x = 0;; ++x) {
            i128 v = t.eval(x);
            if (v >= 0 && v <= i128(limit)) args.emplace_back(x, narrow_i64(v));
            else if (v > i128(limit) && 2 * a * x + a + b > 0) break;
        }
        for (i64 x = -1;; --x) {
            i128 v = t.eval(x);
            if (v >= 0 && v <= i128(limit)) args.emplace_back(x, narrow_i64(v));
            else if (v > i128(limit) && -2 * a * x + a - b > 0) break;
        }
        std::sort(args.begin(), args.end());
        std::vector<u64> pair_cnt(size_t(limit) + 1, 0);
        for (size_t i = 0; i < args.size(); ++i)
            for (size_t j = i; j < args.size(); ++j) {
                i64 s = args[i].second + args[j].second;
                if (s <= limit) pair_cnt[size_t(s)]++;
            }
        for (i64 v = 0; v <= limit; ++v)
            if (pair_cnt[size_t(v)]) yz.emplace_back(v, i64(pair_cnt[size_t(v)]));
    }
    {
        const Term& t = prob.terms[0];
        auto xv = term_values_with_multiplicity(t, prob.domain, limit);
        for (auto& [vx, mx] : xv)
            for (auto& [vyz, myz] : yz) {
                i64 s = vx + vyz;
                if (s > limit) break;
                cnt[size_t(s)] += u64(mx) * u64(myz);
            }
    }
    std::vector<i64> unique;
    for (i64 n = 0; n <= limit; ++n)
        if (cnt[size_t(n)] == 1) unique.push_back(n);
    r.evidence["computed_unique_set"] = unique;
    r.evidence["expected_unique_set"] = c.expected_unique_set;
    if (unique == c.expected_unique_set) {
        r.verdict = "consistent";
    } else {
        r.verdict = "refuted";
        std::set<i64> expected(c.expected_unique_set.begin(), c.expected_unique_set.end());
        for (i64 n : unique)
            if (!expected.count(n)) {
                r.evidence["counterexample"] = n;
                break;
            }
        if (!r.evidence.contains("counterexample") && !c.expected_unique_set.empty())
            r.evidence["counterexample"] = c.expected_unique_set.front();
    }
    return r;
}

Report check_witness_sweep(const Claim& c, const VerifyOptions& opts) {
    SweepResult sr = run_witness_sweep(c.theorem, c.params, c.span, opts);
    Report r = make_report(c, sr.to);
    r.evidence["theorem"] = theorem_name(c.theorem);
    r.evidence["a"] = c.params.a;
    r.evidence["b"] = c.params.b;
    r.evidence["from"] = sr.from;
    r.evidence["to"] = sr.to;
    r.evidence["checked"] = sr.checked;
    r.evidence["failures"] = sr.failures;
    if (sr.failures > 0) {
        r.verdict = "refuted";
        r.evidence["counterexample"] = *sr.first_failure;
        r.evidence["error"] = sr.first_error;
    } else {
        r.verdict = "confirmed";
    }
    return r;
}

}  // namespace

Report verify_claim(const std::string& id, i64 limit, const VerifyOptions& opts) {
    const Claim& c = find_claim(id);
    if (limit <= 0) limit = c.default_limit();
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    if (c.kind == ClaimKind::WitnessSweep) {
        r = check_witness_sweep(c, opts);
    } else if (limit < c.min_limit) {
        r = make_report(c, limit);
        r.verdict = "inconclusive";
        r.evidence["note"] = "limit below this claim's minimum meaningful limit";
        r.evidence["min_limit"] = c.min_limit;
    } else {
        switch (c.kind) {
            case ClaimKind::ExceptionSet:
                r = check_exception_set(c, limit, opts);
                break;
            case ClaimKind::Threshold:
                r = check_threshold(c, limit, opts);
                break;
            case ClaimKind::Conjecture:
                switch (c.ctype) {
                    case ConjectureType::ExceptionSet: r = check_exception_set(c, limit, opts); break;
                    case ConjectureType::Threshold: r = check_threshold(c, limit, opts); break;
                    case ConjectureType::MultiplesOf4: r = check_multiples_of_4(c, limit, opts); break;
                    case ConjectureType::Uniqueness: r = check_uniqueness(c, limit, opts); break;
                    default: throw std::logic_error("conjecture claim without a type: " + c.id);
                }
                break;
            default:
                throw std::logic_error("unhandled claim kind");
        }
    }
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
}

Report check_conjecture(const std::string& id, i64 limit, const VerifyOptions& opts) {
    const Claim& c = find_claim(id);
    if (c.kind != ClaimKind::Conjecture)
        throw std::invalid_argument("claim " + id + " is not a conjecture");
    return verify_claim(id, limit, opts);
}

std::vector<Report> run_claims(const std::vector<std::string>& ids, i64 limit,
                               const VerifyOptions& opts) {
    std::vector<Report> out(ids.size());
    int nt = opts.threads > 0 ? opts.threads : int(std::thread::hardware_concurrency());
    nt = std::max(1, std::min<int>(nt, 8));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= ids.size()) break;
            // claims run sequentially inside: one thread per claim
            out[i] = verify_claim(ids[i], limit, VerifyOptions{1, opts.timings});
        }
    };
    if (nt == 1 || ids.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

json report_to_json(const Report& r, bool timings) {
    json j{{"id", r.id},
           {"kind", r.kind},
           {"verdict", r.verdict},
           {"limit", r.limit},
           {"evidence", r.evidence},
           {"paper_locus", r.source}};
    if (timings) j["wall_ms"] = r.wall_ms;
    return j;
}

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "id,kind,verdict,limit,detail\n";
    for (const Report& r : reports) {
        std::string detail = r.evidence.contains("counterexample")
                                 ? "counterexample=" + r.evidence["counterexample"].dump()
                             : r.evidence.contains("observed_max_nonrepresentable")
                                 ? "observed=" + r.evidence["observed_max_nonrepresentable"].dump()
                             : r.evidence.contains("checked")
                                 ? "checked=" + r.evidence["checked"].dump()
                                 : "";
        os << r.id << "," << r.kind << "," << r.verdict << "," << r.limit << "," << detail << "\n";
    }
    return os.str();
}

bool sweep_admissible(TheoremId id, const FormParams& p, i64 n) {
    switch (id) {
        case TheoremId::TH21:
        case TheoremId::TH12_ODD:
        case TheoremId::TH13:
            return (p.ab_odd() && n % 2 == 0) || (p.a % 2 == 0 && mod_floor(n, 2) == 1) ||
                   (p.b % 2 == 0 && mod_floor(n, 4) != 0);
        case TheoremId::TH22:
        case TheoremId::TH12_EVEN_QUARTER:
            return n % 2 == 0;
        case TheoremId::TH2:
            return !(p.ab_odd() && n % 2 != 0);
        case TheoremId::TH3:
            return p.a * p.b % 2 == 0 || n % 2 == 0;
        case TheoremId::TH52_EVEN_B:
            return mod_floor(n, 4) != 0;
        default:
            return true;
    }
}

WitnessTrace construct_for(TheoremId id, const FormParams& p, i64 n) {
    switch (id) {
        case TheoremId::TH11: return witness_halved(p, n);
        case TheoremId::TH12_ODD:
        case TheoremId::TH13:
        case TheoremId::TH21: return witness_unhalved(p, n);
        case TheoremId::TH12_EVEN_QUARTER:
        case TheoremId::TH22: return witness_even_quarter(p, n);
        case TheoremId::TH2: return witness_weighted2(p, n);
        case TheoremId::COR2: return witness_weighted2_halved(p, n);
        case TheoremId::TH3: return witness_weighted3(p, n);
        case TheoremId::COR19: return witness_weighted3_halved(p, n);
        case TheoremId::TH51:
        case TheoremId::TH52_EVEN_A:
        case TheoremId::TH52_EVEN_B: return witness_integers(p, n);
    }
    throw std::logic_error("construct_for: unreachable");
}

RepProblem sweep_problem(TheoremId id, const FormParams& p) {
    switch (id) {
        case TheoremId::TH11: return RepProblem::quad(p, 1, true, Domain::N);
        case TheoremId::TH12_ODD:
        case TheoremId::TH13:
        case TheoremId::TH21:
        case TheoremId::TH12_EVEN_QUARTER:
        case TheoremId::TH22: return RepProblem::quad(p, 1, false, Domain::N);
        case TheoremId::TH2: return RepProblem::quad(p, 2, false, Domain::N);
        case TheoremId::COR2:
            return RepProblem({Term(p, 1, false), Term(p, 1, true), Term(p, 1, true), Term(p, 1, true)},
                              Domain::N);
        case TheoremId::TH3: return RepProblem::quad(p, 3, false, Domain::N);
        case TheoremId::COR19:
            return RepProblem({Term(p, 3, true), Term(p, 1, true), Term(p, 1, true), Term(p, 1, true)},
                              Domain::N);
        case TheoremId::TH51: return RepProblem::quad(p, 1, true, Domain::Z);
        case TheoremId::TH52_EVEN_A:
        case TheoremId::TH52_EVEN_B: return RepProblem::quad(p, 1, false, Domain::Z);
    }
    throw std::logic_error("sweep_problem: unreachable");
}

SweepResult run_witness_sweep(TheoremId id, const FormParams& p, i64 span,
                              const VerifyOptions& opts) {
    SweepResult sr;
    sr.from = least_n_meeting(id, p);
    sr.to = checked_add(sr.from, span);
    RepProblem prob = sweep_problem(id, p);
    RepSet rs = sieve_representable(prob, sr.to, {10'000'000, opts.threads});
    for (i64 n = sr.from; n <= sr.to; ++n) {
        if (!sweep_admissible(id, p, n)) continue;
        ++sr.checked;
        try {
            WitnessTrace tr = construct_for(id, p, n);
            if (!tr.verify()) throw std::logic_error("trace failed re-verification");
            if (!rs.test(n)) throw std::logic_error("sieve does not mark n representable");
        } catch (const std::exception& e) {
            ++sr.failures;
            if (!sr.first_failure) {
                sr.first_failure = n;
                sr.first_error = e.what();
            }
        }
    }
    return sr;
}

}  // namespace quadrep
