#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "quadrep/problem.hpp"

namespace quadrep {

/// Characteristic bitset of the representable integers in [0, limit].
class RepSet {
  public:
    RepSet() = default;
    RepSet(i64 limit, RepProblem problem)
        : limit_(limit), words_((limit + 64) / 64, 0), problem_(std::move(problem)) {}

    i64 limit() const { return limit_; }
    const RepProblem& problem() const { return problem_; }

    bool test(i64 n) const {
        return n >= 0 && n <= limit_ && (words_[size_t(n >> 6)] >> (n & 63)) & 1;
    }
    void set(i64 n) { words_[size_t(n >> 6)] |= u64(1) << (n & 63); }

    const std::vector<u64>& words() const { return words_; }
    std::vector<u64>& words() { return words_; }

    /// sorted non-representable integers in [0, limit] (optionally only 4∤n)
    std::vector<i64> exceptions(bool only_non_mult4 = false) const;

    /// largest non-representable n, or -1 when everything is representable
    i64 max_exception() const;

    /// no exceptions in the top fraction of the range (default top 20%)
    bool stable_tail(bool only_non_mult4 = false, double fraction = 0.2) const;

    /// binary dump: "QRS1", little-endian u64 limit, raw bitset words (LE)
    void save(std::ostream& os) const;
    static RepSet load(std::istream& is, RepProblem problem);

  private:
    i64 limit_ = -1;
    std::vector<u64> words_;
    RepProblem problem_;
};

struct SieveOptions {
    i64 cap = 10'000'000;  // refuse larger limits
    int threads = 0;       // 0: hardware concurrency
};

/// Exact characteristic bitset for the problem, by pairwise sumset of the two
/// half-problems combined with a shifted OR over the sparser half's values.
RepSet sieve_representable(const RepProblem& problem, i64 limit, const SieveOptions& opts = {});

/// Complement of the RepSet within [0, limit].
std::vector<i64> exceptions(const RepProblem& problem, i64 limit, const SieveOptions& opts = {});

/// Number of ordered argument tuples representing n.
u64 count_representations(const RepProblem& problem, i64 n, const SieveOptions& opts = {});

struct ThresholdObservation {
    i64 max_nonrepresentable = -1;
    bool stable = false;  // top 20% of the range fully representable
};

ThresholdObservation min_threshold_observed(const RepProblem& problem, i64 limit,
                                            const SieveOptions& opts = {});

/// One explicit argument tuple for n, if any (meet-in-the-middle search).
std::optional<std::vector<i64>> find_tuple(const RepProblem& problem, i64 n);

}  // namespace quadrep
