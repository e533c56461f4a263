#include "quadrep/problem.hpp"

#include <algorithm>
#include <map>

namespace quadrep {

RepProblem RepProblem::quad(FormParams p, i64 lead_coeff, bool halved, Domain dom) {
    std::vector<Term> terms;
    terms.emplace_back(p, lead_coeff, halved);
    for (int i = 0; i < 3; ++i) terms.emplace_back(p, 1, halved);
    return RepProblem(std::move(terms), dom);
}

i128 RepProblem::evaluate(std::span<const i64> xs) const {
    if (xs.size() != terms.size())
        throw std::invalid_argument("RepProblem::evaluate: argument count mismatch");
    i128 total = 0;
    for (size_t i = 0; i < terms.size(); ++i) total = checked_add128(total, terms[i].eval(xs[i]));
    return total;
}

bool RepProblem::check_witness(const Witness& w, i64 n) const {
    if (terms.size() != 4) return false;
    if (domain == Domain::N)
        for (i64 v : w.v)
            if (v < 0) return false;
    return evaluate(std::span<const i64>(w.v.data(), 4)) == i128(n);
}

std::string RepProblem::key() const {
    std::string out = domain == Domain::N ? "N:" : "Z:";
    for (size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        if (i) out += "+";
        if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
        out += (t.halved ? "h(" : "f(") + std::to_string(t.params.a) + "," +
               std::to_string(t.params.b) + ")";
    }
    return out;
}

namespace {

// Enumerate one sign arm until the form is monotonically above limit.
// Negative values (possible for small |x| when b is large) are skipped.
template <typename Emit>
void enumerate_arm(const Term& t, i64 limit, i64 start, int step, Emit&& emit) {
    const i64 a = t.params.a, b = t.params.b;
    for (i64 x = start;; x += step) {
        i128 v = t.eval(x);
        if (v >= 0 && v <= i128(limit)) {
            emit(narrow_i64(v));
        } else if (v > i128(limit)) {
            i64 next_growth = step > 0 ? 2 * a * x + a + b : -2 * a * x + a - b;
            if (next_growth > 0) break;
        }
    }
}

}  // namespace

std::vector<std::pair<i64, i64>> term_values_with_multiplicity(const Term& term, Domain domain,
                                                               i64 limit) {
    std::map<i64, i64> acc;
    enumerate_arm(term, limit, 0, +1, [&](i64 v) { acc[v]++; });
    if (domain == Domain::Z)
        enumerate_arm(term, limit, -1, -1, [&](i64 v) { acc[v]++; });
    return {acc.begin(), acc.end()};
}

std::vector<i64> term_values(const Term& term, Domain domain, i64 limit) {
    auto pairs = term_values_with_multiplicity(term, domain, limit);
    std::vector<i64> out;
    out.reserve(pairs.size());
    for (auto& [v, m] : pairs) out.push_back(v);
    return out;
}

}  // namespace quadrep
