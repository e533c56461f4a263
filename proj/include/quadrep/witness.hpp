#pragma once

#include <optional>
#include <string>

#include "quadrep/intervals.hpp"
#include "quadrep/problem.hpp"
#include "quadrep/solvers.hpp"
#include "quadrep/thresholds.hpp"

namespace quadrep {

/// Complete replay record of one witness construction: which window was used,
/// which d (or B) was selected in which congruence class, the derived c (or
/// residual m), the inner solver tuple and the assembled witness.
struct WitnessTrace {
    TheoremId theorem;
    FormParams params;
    i64 n = 0;                    // the represented integer
    std::string case_label;
    i64 selected = 0;             // d, or B for the weighted-2 construction
    i64 derived = 0;              // c, or the residual m
    std::optional<int> delta;     // the mod-5 twist of the weighted-2 proof
    IntervalSpec window;
    std::array<i64, 4> inner{};   // tuple returned by the inner solver
    Witness witness;              // final assembled tuple (order matches problem terms)
    RepProblem problem;

    /// re-evaluates the defining identity
    bool verify() const { return problem.check_witness(witness, n); }
};

/// n = sum of four x(ax+b) over N; cases: odd ab with even n, or even a with
/// odd n, or even b with 4 not dividing n. Requires n above the th2.1 bound.
WitnessTrace witness_unhalved(const FormParams& params, i64 n);

/// n = sum of four x(ax+b)/2 over N (odd ab); runs the unhalved construction
/// on 2n. Requires n above the th1.1 bound.
WitnessTrace witness_halved(const FormParams& params, i64 n);

/// even a, even n with n/4 above the th2.2 bound; d is selected so that
/// c = 2 (mod 4).
WitnessTrace witness_even_quarter(const FormParams& params, i64 n);

/// n = 2w(aw+b) + x(ax+b) + y(ay+b) + z(az+b) over N via the shifted
/// three-square representation; needs gcd(a,5b)=1 and n at/above the th2
/// bound (even n when ab is odd).
WitnessTrace witness_weighted2(const FormParams& params, i64 n);

/// halved corollary form n = w(aw+b) + sum of three x(ax+b)/2 (odd ab);
/// runs the weighted-2 construction on 2n.
WitnessTrace witness_weighted2_halved(const FormParams& params, i64 n);

/// n = 3w(aw+b) + x(ax+b) + y(ay+b) + z(az+b) over N; needs ab or n even and
/// n/6 above the th3 bound.
WitnessTrace witness_weighted3(const FormParams& params, i64 n);

/// halved corollary form n = 3w(aw+b)/2 + sum of three x(ax+b)/2 (odd ab,
/// n/3 above the cor1.9 bound); runs the weighted-3 construction on 2n.
WitnessTrace witness_weighted3_halved(const FormParams& params, i64 n);

/// Four integer-domain terms (halved when ab is odd, per th5.1; otherwise
/// th5.2). d is the least admissible representative of the congruence class
/// below the upper endpoint of I; only 4c > d^2 is needed.
WitnessTrace witness_integers(const FormParams& params, i64 n);

}  // namespace quadrep
