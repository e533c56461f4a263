#pragma once

#include <string>

#include "quadrep/forms.hpp"
#include "quadrep/real_bound.hpp"

namespace quadrep {

/// Theorem ids for the explicit asymptotic bounds. th1.2-odd and th1.3 share
/// th2.1's expression; th1.2-even-quarter shares th2.2's. th3/cor1.9 bounds
/// are quotient-form (they bound n/6 and n/3 respectively); th2.2 bounds n/4.
enum class TheoremId {
    TH11,
    TH12_ODD,
    TH12_EVEN_QUARTER,
    TH13,
    TH21,
    TH22,
    TH2,
    TH3,
    COR19,
    COR2,
    TH51,
    TH52_EVEN_A,
    TH52_EVEN_B,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

/// Exact bound for the theorem; throws std::invalid_argument when the
/// theorem's gcd/parity hypotheses fail for params.
RealBound threshold(TheoremId id, const FormParams& params);

/// The n-comparison the theorem actually makes, folding in quotient scaling
/// (n/4, n/6, n/3) and strict-vs-weak inequality. True when n is above/at the
/// theorem's bound.
bool n_meets_threshold(TheoremId id, const FormParams& params, i64 n);

/// Least n satisfying n_meets_threshold (parity/congruence side conditions
/// not included).
i64 least_n_meeting(TheoremId id, const FormParams& params);

}  // namespace quadrep
