#pragma once

#include <string>

#include "quadrep/forms.hpp"
#include "quadrep/real_bound.hpp"

namespace quadrep {

/// The three d-selection windows of the constructive proofs:
///   I = ( (sqrt(3a(n-a+b)+9b^2/4) - a - 3b/2)/a , 2(sqrt(an+b^2) - b)/a )      open
///   J = [ (sqrt(24an+25b^2) - 5b)/(12a) , (sqrt(4an/5+b^2) - b)/(2a) ]         closed
///   K = ( (sqrt(5a(n-a+b)+25b^2/4) - a - 5b/2)/a , (sqrt(6an+9b^2) - 3b)/a )   open
enum class IntervalId { I, J, K };

struct IntervalSpec {
    IntervalId id;
    RealBound lo;
    RealBound hi;
    bool lo_open = true;
    bool hi_open = true;

    /// exact membership test for an integer d
    bool contains(i64 d) const;

    /// least integer inside the interval from below (lo side only)
    i64 least_integer_inside() const;

    /// exact comparison of (hi - lo) against the integer len
    int compare_length_to(i64 len) const;
    bool length_exceeds(i64 len) const { return compare_length_to(len) > 0; }
    bool length_at_least(i64 len) const { return compare_length_to(len) >= 0; }
};

/// Builds the window for the given problem instance; endpoints are exact.
/// Throws std::domain_error when a radicand is negative (n far below range).
IntervalSpec interval(IntervalId id, const FormParams& params, i64 n);

std::string interval_name(IntervalId id);

/// Smallest integer d inside spec with d = cls.rep (mod cls.modulus), or
/// nullopt-like -1 sentinel free version: throws std::runtime_error when the
/// class does not meet the interval.
i64 least_in_interval(const IntervalSpec& spec, i64 rep, i64 modulus);

}  // namespace quadrep
