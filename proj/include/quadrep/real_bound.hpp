#pragma once

#include <string>

#include "quadrep/numeric.hpp"

namespace quadrep {

/// Exact value (p + q*sqrt(r)) / den with integer p, q >= 0, r >= 0, den > 0.
/// Every threshold and interval endpoint normalizes to this shape; perfect
/// square radicands fold into p, so a surviving radical is irrational.
/// Comparisons are decided by sign analysis and integer squaring only.
class RealBound {
  public:
    RealBound() = default;

    static RealBound integer(i64 v) { return RealBound(v, 0, 0, 1); }
    static RealBound rational(i64 num, i64 den) { return RealBound(num, 0, 0, den); }
    /// (p + q*sqrt(r))/den
    static RealBound radical(i64 p, i64 q, i64 r, i64 den = 1) { return RealBound(p, q, r, den); }

    i64 p() const { return p_; }
    i64 q() const { return q_; }
    i64 r() const { return r_; }
    i64 den() const { return den_; }

    bool is_rational() const { return q_ == 0; }

    /// sign of (this - k); exact.
    int compare_to_int(i64 k) const;
    /// sign of (this - other); exact, handles distinct radicands.
    int compare(const RealBound& other) const;

    bool operator<(i64 k) const { return compare_to_int(k) < 0; }
    bool operator>(i64 k) const { return compare_to_int(k) > 0; }
    bool operator==(const RealBound& o) const { return compare(o) == 0; }

    /// min { n in Z : n > value }; integer square roots only.
    i64 least_integer_above() const;
    /// min { n in Z : n >= value }
    i64 least_integer_at_least() const;

    RealBound plus_int(i64 k) const;
    /// multiply by a positive integer
    RealBound scaled(i64 k) const;

    /// display only; never used in comparisons
    double approx() const;
    /// e.g. "1443 + 91*sqrt(246)" or "(-13 + sqrt(344289))/10"
    std::string to_string() const;

  private:
    RealBound(i64 p, i64 q, i64 r, i64 den);
    void normalize();

    i64 p_ = 0;
    i64 q_ = 0;
    i64 r_ = 0;
    i64 den_ = 1;
};

/// sign of (s + q*sqrt(r)) for i128 s, q of any sign, r >= 0.
int radical_sign(i128 s, i128 q, i128 r);

}  // namespace quadrep
