#pragma once

#include <array>

#include "quadrep/numeric.hpp"

namespace quadrep {

enum class Domain { N, Z };

/// A solution tuple, re-verified against its defining identity before return.
struct Witness {
    std::array<i64, 4> v{0, 0, 0, 0};
    Domain domain = Domain::N;
};

/// The (c,d) pair fed to the constrained four-square solvers, with the side
/// conditions the lemmas require, evaluated on demand.
struct CauchyPair {
    i64 c = 0;
    i64 d = 0;

    bool parity_ok() const { return mod_floor(c - d, 2) == 0; }
    bool not_div4() const { return mod_floor(c, 4) != 0; }
    bool cauchy_window() const { return 4 * c > d * d && 3 * c < d * d + 2 * d + 4; }
    bool cauchy_lower() const { return 4 * c > d * d; }
    bool lem_ms_window() const { return 6 * c > d * d && 5 * c < d * d + 2 * d + 6; }
    bool lem_ms_residue_ok() const { return mod_floor(c, 9) == 3 || d % 3 != 0; }
};

/// w^2+x^2+y^2+z^2 = c, w+x+y+z = d over the naturals; deterministic
/// first solution in w <= x <= y <= z order. Preconditions: c = d (mod 2),
/// 4 does not divide c, 4c > d^2, 3c < d^2+2d+4, c,d >= 0. The degenerate
/// (0,0) is accepted. A search failure under valid preconditions would
/// contradict the lemma and aborts with diagnostics.
Witness cauchy_solve(i64 c, i64 d);

/// Same sums over the integers; only 4c > d^2 is needed (no upper window).
Witness cauchy_solve_z(i64 c, i64 d);

/// 3w^2+x^2+y^2+z^2 = c, 3w+x+y+z = d over the naturals.
/// Preconditions: c = d (mod 2), c,d >= 1, (c = 3 (mod 9) or 3 does not
/// divide d), 6c > d^2, 5c < d^2+2d+6.
Witness lem_ms_solve(i64 c, i64 d);

struct KsSolution {
    i64 x = 0, y = 0, z = 0;
};

/// x^2+y^2+z^2+(x+y+z)^2/2 = m over the integers, for even m not in the
/// 5-adic exclusion set E. x+y+z comes out even, so the half term is integral.
KsSolution ks_solve(i64 m);

/// 5-adic decomposition n = 5^v * m with 5 not dividing m.
struct FiveAdicClass {
    i64 n = 0;
    int valuation = 0;
    i64 cofactor = 0;

    static FiveAdicClass of(i64 n);
    /// n in E iff the valuation is odd and the cofactor is +-2 mod 5
    bool in_exclusion_set() const {
        return n > 0 && valuation % 2 == 1 && (cofactor % 5 == 2 || cofactor % 5 == 3);
    }
};

/// membership in E = { 5^(2k+1) m : m = +-2 (mod 5) }; in_E(0) is false.
bool in_E(i64 n);

}  // namespace quadrep
