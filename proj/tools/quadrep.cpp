#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "quadrep/json_io.hpp"
#include "quadrep/verify.hpp"

using namespace quadrep;

namespace {

struct CommonOpts {
    i64 a = 1;
    i64 b = 0;
    i64 weighted = 1;
    bool halved = false;
    std::string domain = "n";
    std::string format = "text";
    int threads = 0;
    std::string output;
};

Domain parse_domain(const std::string& s) {
    if (s == "n" || s == "N") return Domain::N;
    if (s == "z" || s == "Z") return Domain::Z;
    throw CLI::ValidationError("--domain must be n or z");
}

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

RepProblem build_problem(const CommonOpts& o, const std::string& problem_file) {
    if (!problem_file.empty()) {
        std::ifstream in(problem_file);
        if (!in) throw std::runtime_error("cannot open problem file " + problem_file);
        json j = json::parse(in);
        return problem_from_json(j);
    }
    if (o.weighted < 1 || o.weighted > 3)
        throw CLI::ValidationError("--weighted must be 1, 2 or 3");
    return RepProblem::quad(FormParams(o.a, o.b), o.weighted, o.halved, parse_domain(o.domain));
}

TheoremId pick_witness_theorem(const CommonOpts& o, i64 n) {
    Domain dom = parse_domain(o.domain);
    FormParams p(o.a, o.b);
    if (dom == Domain::Z) {
        if (o.weighted != 1) throw CLI::ValidationError("integer-domain witnesses are unweighted");
        if (p.ab_odd()) return TheoremId::TH51;
        return p.a % 2 == 0 ? TheoremId::TH52_EVEN_A : TheoremId::TH52_EVEN_B;
    }
    if (o.weighted == 2) return o.halved ? TheoremId::COR2 : TheoremId::TH2;
    if (o.weighted == 3) return o.halved ? TheoremId::COR19 : TheoremId::TH3;
    if (o.halved) return TheoremId::TH11;
    if (p.a % 2 == 0 && n % 2 == 0) return TheoremId::TH22;
    return TheoremId::TH21;
}

void emit_int_list(std::ostream& os, const std::vector<i64>& v, const std::string& format) {
    if (format == "json") {
        os << json(v).dump() << "\n";
    } else if (format == "csv") {
        os << "n\n";
        for (i64 x : v) os << x << "\n";
    } else {
        os << "{";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "}\n";
    }
}

std::vector<std::string> claim_ids(bool conjectures) {
    std::vector<std::string> ids;
    for (const Claim& c : claim_registry())
        if ((c.kind == ClaimKind::Conjecture) == conjectures) ids.push_back(c.id);
    return ids;
}

int emit_reports(const std::vector<Report>& reports, const CommonOpts& o, bool timings,
                 std::ostream& os) {
    if (o.format == "json") {
        json arr = json::array();
        for (const Report& r : reports) arr.push_back(report_to_json(r, timings));
        os << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << reports_to_csv(reports);
    } else {
        for (const Report& r : reports) {
            os << r.id << ": " << r.verdict << " (limit " << r.limit << ", " << r.wall_ms << " ms)";
            if (r.evidence.contains("counterexample"))
                os << " counterexample=" << r.evidence["counterexample"].dump();
            if (r.evidence.contains("observed_max_nonrepresentable"))
                os << " observed=" << r.evidence["observed_max_nonrepresentable"].dump();
            os << "\n";
        }
    }
    for (const Report& r : reports)
        if (r.failed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadrep: four-term quadratic-form representations, witnesses, sieves and claim checks"};
    app.require_subcommand(1);
    CommonOpts o;

    // witness
    auto* wcmd = app.add_subcommand("witness", "construct an explicit representation witness");
    i64 w_n = 0;
    std::string w_theorem;
    wcmd->add_option("--a", o.a, "form parameter a")->required();
    wcmd->add_option("--b", o.b, "form parameter b")->required();
    wcmd->add_option("--n", w_n, "integer to represent")->required();
    wcmd->add_option("--weighted", o.weighted, "leading coefficient (1, 2 or 3)");
    wcmd->add_flag("--halved", o.halved, "use x(ax+b)/2 terms");
    wcmd->add_option("--domain", o.domain, "n (naturals) or z (integers)");
    wcmd->add_option("--theorem", w_theorem, "force a specific construction");
    wcmd->add_option("--format", o.format, "json | text");

    // bound
    auto* bcmd = app.add_subcommand("bound", "print a theorem's exact threshold");
    std::string b_theorem;
    bcmd->add_option("--theorem", b_theorem, "theorem id (e.g. th1.1, th2, th3)")->required();
    bcmd->add_option("--a", o.a, "form parameter a")->required();
    bcmd->add_option("--b", o.b, "form parameter b")->required();
    bcmd->add_option("--format", o.format, "json | text");

    // sieve
    auto* scmd = app.add_subcommand("sieve", "sieve representable integers");
    i64 s_limit = 200000;
    std::string s_dump, s_problem;
    scmd->add_option("--a", o.a, "form parameter a");
    scmd->add_option("--b", o.b, "form parameter b");
    scmd->add_option("--weighted", o.weighted, "leading coefficient");
    scmd->add_flag("--halved", o.halved, "use halved terms");
    scmd->add_option("--domain", o.domain, "n or z");
    scmd->add_option("--limit", s_limit, "sieve limit");
    scmd->add_option("--problem", s_problem, "JSON problem file (mixed forms)");
    scmd->add_option("--dump", s_dump, "write the bitset (QRS1 format)");
    scmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
    scmd->add_option("--format", o.format, "json | csv | text");
    scmd->add_option("--output", o.output, "write results to a file");

    // exceptions
    auto* ecmd = app.add_subcommand("exceptions", "list non-representable integers");
    i64 e_limit = 200000;
    std::string e_problem;
    bool e_non4 = false;
    ecmd->add_option("--a", o.a, "form parameter a");
    ecmd->add_option("--b", o.b, "form parameter b");
    ecmd->add_option("--weighted", o.weighted, "leading coefficient");
    ecmd->add_flag("--halved", o.halved, "use halved terms");
    ecmd->add_option("--domain", o.domain, "n or z");
    ecmd->add_option("--limit", e_limit, "sieve limit");
    ecmd->add_option("--problem", e_problem, "JSON problem file");
    ecmd->add_flag("--non-mult4", e_non4, "keep only n with 4 not dividing n");
    ecmd->add_option("--threads", o.threads, "worker threads");
    ecmd->add_option("--format", o.format, "json | csv | text");
    ecmd->add_option("--output", o.output, "write results to a file");

    // count
    auto* ccmd = app.add_subcommand("count", "count ordered representations of n");
    i64 c_n = 0;
    std::string c_problem;
    ccmd->add_option("--a", o.a, "form parameter a");
    ccmd->add_option("--b", o.b, "form parameter b");
    ccmd->add_option("--weighted", o.weighted, "leading coefficient");
    ccmd->add_flag("--halved", o.halved, "use halved terms");
    ccmd->add_option("--domain", o.domain, "n or z");
    ccmd->add_option("--n", c_n, "target integer")->required();
    ccmd->add_option("--problem", c_problem, "JSON problem file");

    // verify
    auto* vcmd = app.add_subcommand("verify", "run registered theorem-backed claims");
    std::string v_id, v_claims_file;
    i64 v_limit = 0;
    bool v_timings = false;
    vcmd->add_option("--id", v_id, "single claim id (default: all non-conjecture claims)");
    vcmd->add_option("--limit", v_limit, "sieve limit (0 = per-claim default)");
    vcmd->add_option("--claims", v_claims_file, "override the claim registry file");
    vcmd->add_option("--threads", o.threads, "worker threads");
    vcmd->add_flag("--timings", v_timings, "include wall_ms in JSON output");
    vcmd->add_option("--format", o.format, "json | csv | text");
    vcmd->add_option("--output", o.output, "write the report to a file");

    // conjecture
    auto* jcmd = app.add_subcommand("conjecture", "run registered conjecture probes");
    std::string j_id, j_claims_file;
    i64 j_limit = 0;
    bool j_timings = false;
    jcmd->add_option("--id", j_id, "single conjecture id (default: all)");
    jcmd->add_option("--limit", j_limit, "sieve limit (0 = per-claim default)");
    jcmd->add_option("--claims", j_claims_file, "override the claim registry file");
    jcmd->add_option("--threads", o.threads, "worker threads");
    jcmd->add_flag("--timings", j_timings, "include wall_ms in JSON output");
    jcmd->add_option("--format", o.format, "json | csv | text");
    jcmd->add_option("--output", o.output, "write the report to a file");

    // check
    auto* kcmd = app.add_subcommand("check", "re-verify a witness JSON (from --stdin or a file)");
    std::string k_file;
    bool k_stdin = false;
    kcmd->add_flag("--stdin", k_stdin, "read the witness JSON from standard input");
    kcmd->add_option("file", k_file, "witness JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        if (wcmd->parsed()) {
            TheoremId id = w_theorem.empty() ? pick_witness_theorem(o, w_n)
                                             : theorem_from_name(w_theorem);
            WitnessTrace tr = construct_for(id, FormParams(o.a, o.b), w_n);
            if (o.format == "text") {
                std::cout << theorem_name(tr.theorem) << " witness for n=" << tr.n << ": (";
                for (size_t i = 0; i < 4; ++i) std::cout << (i ? "," : "") << tr.witness.v[i];
                std::cout << ")  [" << tr.case_label << "]\n";
            } else {
                std::cout << to_json(tr).dump(2) << "\n";
            }
            return 0;
        }
        if (bcmd->parsed()) {
            TheoremId id = theorem_from_name(b_theorem);
            FormParams p(o.a, o.b);
            RealBound bd = threshold(id, p);
            i64 least = least_n_meeting(id, p);
            if (o.format == "json") {
                std::cout << json{{"theorem", b_theorem},
                                  {"a", o.a},
                                  {"b", o.b},
                                  {"exact", bd.to_string()},
                                  {"approx", bd.approx()},
                                  {"least_n", least}}
                                 .dump(2)
                          << "\n";
            } else {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.3f", bd.approx());
                std::cout << bd.to_string() << " ≈ " << buf << "; least n = " << least << "\n";
            }
            return 0;
        }
        if (scmd->parsed()) {
            RepProblem prob = build_problem(o, s_problem);
            std::ostream& os = out_stream(o.output, file);
            RepSet rs = [&] {
                const char* cache = std::getenv("QUADREP_CACHE_DIR");
                if (cache && *cache) {
                    std::filesystem::path dir(cache);
                    std::filesystem::create_directories(dir);
                    auto key = std::to_string(fnv1a(prob.key() + "@" + std::to_string(s_limit)));
                    auto path = dir / ("qrs_" + key + ".bin");
                    if (std::filesystem::exists(path)) {
                        std::ifstream in(path, std::ios::binary);
                        return RepSet::load(in, prob);
                    }
                    RepSet fresh = sieve_representable(prob, s_limit, {10'000'000, o.threads});
                    std::ofstream outf(path, std::ios::binary);
                    fresh.save(outf);
                    return fresh;
                }
                return sieve_representable(prob, s_limit, {10'000'000, o.threads});
            }();
            if (!s_dump.empty()) {
                std::ofstream dump(s_dump, std::ios::binary);
                rs.save(dump);
            }
            i64 count = 0;
            for (i64 n = 0; n <= rs.limit(); ++n) count += rs.test(n);
            json summary{{"problem", prob.key()},
                         {"limit", rs.limit()},
                         {"representable", count},
                         {"max_nonrepresentable", rs.max_exception()},
                         {"stable_tail", rs.stable_tail()}};
            if (o.format == "json") os << summary.dump(2) << "\n";
            else
                os << prob.key() << ": " << count << "/" << rs.limit() + 1
                   << " representable, max non-representable " << rs.max_exception() << "\n";
            return 0;
        }
        if (ecmd->parsed()) {
            RepProblem prob = build_problem(o, e_problem);
            std::ostream& os = out_stream(o.output, file);
            RepSet rs = sieve_representable(prob, e_limit, {10'000'000, o.threads});
            emit_int_list(os, rs.exceptions(e_non4), o.format);
            return 0;
        }
        if (ccmd->parsed()) {
            RepProblem prob = build_problem(o, c_problem);
            std::cout << count_representations(prob, c_n) << "\n";
            return 0;
        }
        if (vcmd->parsed() || jcmd->parsed()) {
            bool conj = jcmd->parsed();
            const std::string& idflag = conj ? j_id : v_id;
            const std::string& claims_file = conj ? j_claims_file : v_claims_file;
            i64 limit = conj ? j_limit : v_limit;
            bool timings = conj ? j_timings : v_timings;
            if (!claims_file.empty()) {
                std::ifstream in(claims_file);
                if (!in) throw std::runtime_error("cannot open claims file " + claims_file);
                std::stringstream ss;
                ss << in.rdbuf();
                override_registry(parse_claims(ss.str()));
            }
            std::vector<std::string> ids =
                idflag.empty() ? claim_ids(conj) : std::vector<std::string>{idflag};
            auto reports = run_claims(ids, limit, {o.threads, timings});
            std::ofstream f2;
            std::ostream& os = out_stream(o.output, f2);
            return emit_reports(reports, o, timings, os);
        }
        if (kcmd->parsed()) {
            json j;
            if (k_stdin) {
                j = json::parse(std::cin);
            } else {
                if (k_file.empty()) throw std::runtime_error("check: need --stdin or a file");
                std::ifstream in(k_file);
                if (!in) throw std::runtime_error("cannot open " + k_file);
                j = json::parse(in);
            }
            CheckPayload payload = check_payload_from_json(j);
            Witness w{payload.tuple, payload.problem.domain};
            bool ok = payload.problem.check_witness(w, payload.n);
            std::cout << (ok ? "ok" : "FAILED") << ": n=" << payload.n << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
