#pragma once

#include <optional>
#include <vector>

#include "quadrep/json_io.hpp"
#include "quadrep/sieve.hpp"
#include "quadrep/witness.hpp"

namespace quadrep {

enum class ClaimKind { ExceptionSet, Threshold, WitnessSweep, Conjecture };
enum class ConjectureType { None, ExceptionSet, Threshold, MultiplesOf4, Uniqueness };

/// One statement bound to an executable check. Expected values are golden
/// data loaded verbatim from the claims file, never computed here.
struct Claim {
    std::string id;
    ClaimKind kind = ClaimKind::ExceptionSet;
    ConjectureType ctype = ConjectureType::None;
    std::optional<RepProblem> problem;
    std::vector<i64> expected_exceptions;
    bool non_mult4_only = false;
    i64 expected_threshold = -1;
    bool threshold_exact = true;  // equals vs at_most
    std::vector<i64> expected_unique_set;
    // witness sweeps
    TheoremId theorem = TheoremId::TH11;
    FormParams params;
    i64 span = 5000;
    i64 min_limit = 1000;
    std::string source;

    i64 default_limit() const { return kind == ClaimKind::Conjecture ? 400000 : 200000; }
};

struct Report {
    std::string id;
    std::string kind;
    std::string verdict;  // confirmed | consistent | refuted | inconclusive
    i64 limit = 0;
    json evidence;
    std::string source;
    i64 wall_ms = 0;

    bool failed() const { return verdict == "refuted"; }
};

struct VerifyOptions {
    int threads = 0;
    bool timings = false;  // include wall_ms in JSON output
};

std::vector<Claim> parse_claims(const std::string& json_text);
/// the embedded registry (claims.json baked in at build time)
const std::vector<Claim>& claim_registry();
void override_registry(std::vector<Claim> claims);

const Claim& find_claim(const std::string& id);

/// Executes the claim's check at the given limit (<= 0 picks the claim's
/// default). Unknown ids throw; a limit below the claim's minimum yields an
/// inconclusive report.
Report verify_claim(const std::string& id, i64 limit = 0, const VerifyOptions& opts = {});

/// verify_claim restricted to conjecture claims.
Report check_conjecture(const std::string& id, i64 limit = 0, const VerifyOptions& opts = {});

/// Runs many claims (parallel over claims, deterministic order).
std::vector<Report> run_claims(const std::vector<std::string>& ids, i64 limit = 0,
                               const VerifyOptions& opts = {});

json report_to_json(const Report& r, bool timings = false);
std::string reports_to_csv(const std::vector<Report>& reports);

// --- witness sweep machinery (also used by the acceptance suite) ---

/// parity/congruence side condition of each theorem
bool sweep_admissible(TheoremId id, const FormParams& p, i64 n);
/// the witness constructor the theorem id names
WitnessTrace construct_for(TheoremId id, const FormParams& p, i64 n);
/// the representation problem a sweep cross-checks against
RepProblem sweep_problem(TheoremId id, const FormParams& p);

struct SweepResult {
    i64 from = 0;
    i64 to = 0;
    i64 checked = 0;
    i64 failures = 0;
    std::optional<i64> first_failure;
    std::string first_error;
};

/// Runs the constructor over every admissible n in [bound, bound+span] and
/// confirms each witness against an independent sieve of the same range.
SweepResult run_witness_sweep(TheoremId id, const FormParams& p, i64 span,
                              const VerifyOptions& opts = {});

}  // namespace quadrep
