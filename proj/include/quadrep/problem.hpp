#pragma once

#include <span>
#include <string>
#include <vector>

#include "quadrep/forms.hpp"
#include "quadrep/solvers.hpp"

namespace quadrep {

/// One summand coeff * f(x) with f = x(ax+b) or x(ax+b)/2.
struct Term {
    FormParams params;
    i64 coeff = 1;
    bool halved = false;

    Term() = default;
    Term(FormParams p, i64 c, bool h) : params(p), coeff(c), halved(h) {
        if (coeff <= 0) throw std::invalid_argument("Term: coefficient must be positive");
        if (halved && !params.same_parity())
            throw std::invalid_argument("Term: halved form needs a = b (mod 2) to stay integral");
    }

    i128 eval(i64 x) const { return checked_mul128(i128(coeff), eval_form(params, halved, x)); }
};

/// A representation question: which integers are sums of these terms, with
/// arguments ranging over N or Z.
struct RepProblem {
    std::vector<Term> terms;
    Domain domain = Domain::N;

    RepProblem() = default;
    RepProblem(std::vector<Term> t, Domain d) : terms(std::move(t)), domain(d) {
        if (terms.empty()) throw std::invalid_argument("RepProblem: needs at least one term");
    }

    /// the spec'd four-term family: coefficients (k,1,1,1)
    static RepProblem quad(FormParams p, i64 lead_coeff, bool halved, Domain dom);

    i128 evaluate(std::span<const i64> xs) const;
    bool check_witness(const Witness& w, i64 n) const;

    /// canonical text form, also the cache key (e.g. "N:2*h(3,1)+h(3,1)x3")
    std::string key() const;
};

/// All distinct values coeff*f(x) in [0, limit] for x in the domain, sorted.
std::vector<i64> term_values(const Term& term, Domain domain, i64 limit);

/// (value, multiplicity) pairs: multiplicity counts the arguments x mapping
/// to the value; needed for ordered representation counts.
std::vector<std::pair<i64, i64>> term_values_with_multiplicity(const Term& term, Domain domain,
                                                               i64 limit);

}  // namespace quadrep
