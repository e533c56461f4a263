#include "quadrep/sieve.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

namespace quadrep {

std::vector<i64> RepSet::exceptions(bool only_non_mult4) const {
    std::vector<i64> out;
    for (i64 n = 0; n <= limit_; ++n)
        if (!test(n) && !(only_non_mult4 && n % 4 == 0)) out.push_back(n);
    return out;
}

i64 RepSet::max_exception() const {
    for (i64 n = limit_; n >= 0; --n)
        if (!test(n)) return n;
    return -1;
}

bool RepSet::stable_tail(bool only_non_mult4, double fraction) const {
    i64 start = limit_ - i64(double(limit_) * fraction);
    for (i64 n = start; n <= limit_; ++n)
        if (!test(n) && !(only_non_mult4 && n % 4 == 0)) return false;
    return true;
}

void RepSet::save(std::ostream& os) const {
    os.write("QRS1", 4);
    u64 lim = u64(limit_);
    unsigned char hdr[8];
    for (int i = 0; i < 8; ++i) hdr[i] = (lim >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<const char*>(hdr), 8);
    for (u64 w : words_) {
        unsigned char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = (w >> (8 * i)) & 0xff;
        os.write(reinterpret_cast<const char*>(buf), 8);
    }
}

RepSet RepSet::load(std::istream& is, RepProblem problem) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "QRS1", 4) != 0)
        throw std::runtime_error("RepSet::load: bad magic");
    unsigned char hdr[8];
    is.read(reinterpret_cast<char*>(hdr), 8);
    if (!is) throw std::runtime_error("RepSet::load: truncated header");
    u64 lim = 0;
    for (int i = 0; i < 8; ++i) lim |= u64(hdr[i]) << (8 * i);
    RepSet out(i64(lim), std::move(problem));
    for (u64& w : out.words_) {
        unsigned char buf[8];
        is.read(reinterpret_cast<char*>(buf), 8);
        if (!is) throw std::runtime_error("RepSet::load: truncated payload");
        w = 0;
        for (int i = 0; i < 8; ++i) w |= u64(buf[i]) << (8 * i);
    }
    return out;
}

namespace {

size_t word_count(i64 limit) { return size_t((limit + 64) / 64); }

// dst |= src << shift, restricted to dst words [w0, w1)
void or_shifted_range(std::vector<u64>& dst, const std::vector<u64>& src, i64 shift, size_t w0,
                      size_t w1) {
    const size_t q = size_t(shift >> 6);
    const int r = int(shift & 63);
    const size_t nsrc = src.size();
    for (size_t i = std::max(w0, q); i < w1; ++i) {
        size_t j = i - q;
        if (j >= nsrc) break;
        u64 v = src[j] << r;
        if (r && j > 0) v |= src[j - 1] >> (64 - r);
        dst[i] |= v;
    }
}

void or_shifted_parallel(std::vector<u64>& dst, const std::vector<u64>& src,
                         const std::vector<i64>& shifts, int threads) {
    size_t words = dst.size();
    int nt = threads > 0 ? threads : int(std::thread::hardware_concurrency());
    nt = std::max(1, std::min<int>(nt, 16));
    if (nt == 1 || words < 4096) {
        for (i64 s : shifts) or_shifted_range(dst, src, s, 0, words);
        return;
    }
    // disjoint destination ranges, so the result is thread-count independent
    std::vector<std::thread> pool;
    size_t chunk = (words + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        size_t w0 = t * chunk, w1 = std::min(words, w0 + chunk);
        if (w0 >= w1) break;
        pool.emplace_back([&, w0, w1] {
            for (i64 s : shifts) or_shifted_range(dst, src, s, w0, w1);
        });
    }
    for (auto& th : pool) th.join();
}

void mask_tail(std::vector<u64>& words, i64 limit) {
    int used = int((limit + 1) & 63);
    if (used && !words.empty()) words.back() &= (u64(1) << used) - 1;
}

// bitset of a term list folded left-to-right with shifted ORs
std::vector<u64> fold_terms(std::span<const Term> terms, Domain dom, i64 limit, int threads) {
    std::vector<u64> acc(word_count(limit), 0);
    auto first = term_values(terms[0], dom, limit);
    for (i64 v : first) acc[size_t(v >> 6)] |= u64(1) << (v & 63);
    for (size_t i = 1; i < terms.size(); ++i) {
        std::vector<u64> next(word_count(limit), 0);
        auto shifts = term_values(terms[i], dom, limit);
        or_shifted_parallel(next, acc, shifts, threads);
        acc = std::move(next);
    }
    mask_tail(acc, limit);
    return acc;
}

std::vector<i64> set_bits(const std::vector<u64>& words) {
    std::vector<i64> out;
    for (size_t w = 0; w < words.size(); ++w) {
        u64 v = words[w];
        while (v) {
            int b = __builtin_ctzll(v);
            out.push_back(i64(w * 64 + size_t(b)));
            v &= v - 1;
        }
    }
    return out;
}

size_t popcount_words(const std::vector<u64>& words) {
    size_t c = 0;
    for (u64 w : words) c += size_t(__builtin_popcountll(w));
    return c;
}

void check_limit(i64 limit, const SieveOptions& opts) {
    if (limit < 0) throw std::invalid_argument("sieve: negative limit");
    if (limit > opts.cap)
        throw std::invalid_argument("sieve: limit " + std::to_string(limit) +
                                    " exceeds configured cap " + std::to_string(opts.cap));
}

}  // namespace

RepSet sieve_representable(const RepProblem& problem, i64 limit, const SieveOptions& opts) {
    check_limit(limit, opts);
    RepSet out(limit, problem);
    const auto& terms = problem.terms;
    if (terms.size() == 1) {
        for (i64 v : term_values(terms[0], problem.domain, limit)) out.set(v);
        return out;
    }
    // two half-problems: terms [0, h) and [h, k)
    size_t h = terms.size() / 2;
    auto half1 = fold_terms(std::span(terms).subspan(0, h), problem.domain, limit, opts.threads);
    auto half2 = fold_terms(std::span(terms).subspan(h), problem.domain, limit, opts.threads);
    // shifted OR over the sparser half's value list
    if (popcount_words(half1) > popcount_words(half2)) half1.swap(half2);
    auto shifts = set_bits(half1);
    or_shifted_parallel(out.words(), half2, shifts, opts.threads);
    mask_tail(out.words(), limit);
    return out;
}

std::vector<i64> exceptions(const RepProblem& problem, i64 limit, const SieveOptions& opts) {
    return sieve_representable(problem, limit, opts).exceptions();
}

u64 count_representations(const RepProblem& problem, i64 n, const SieveOptions& opts) {
    check_limit(n, opts);
    const auto& terms = problem.terms;
    // counts of each half-problem value, with argument multiplicities
    auto half_counts = [&](std::span<const Term> part) {
        std::vector<u64> cnt(size_t(n) + 1, 0);
        auto first = term_values_with_multiplicity(part[0], problem.domain, n);
        for (auto& [v, m] : first) cnt[size_t(v)] += u64(m);
        for (size_t i = 1; i < part.size(); ++i) {
            std::vector<u64> next(size_t(n) + 1, 0);
            auto vals = term_values_with_multiplicity(part[i], problem.domain, n);
            for (auto& [v, m] : vals)
                for (i64 s = v; s <= n; ++s)
                    if (cnt[size_t(s - v)]) next[size_t(s)] += cnt[size_t(s - v)] * u64(m);
            cnt = std::move(next);
        }
        return cnt;
    };
    if (terms.size() == 1) {
        auto vals = term_values_with_multiplicity(terms[0], problem.domain, n);
        for (auto& [v, m] : vals)
            if (v == n) return u64(m);
        return 0;
    }
    size_t h = terms.size() / 2;
    auto c1 = half_counts(std::span(terms).subspan(0, h));
    auto c2 = half_counts(std::span(terms).subspan(h));
    u64 total = 0;
    for (i64 v = 0; v <= n; ++v)
        if (c1[size_t(v)]) total += c1[size_t(v)] * c2[size_t(n - v)];
    return total;
}

ThresholdObservation min_threshold_observed(const RepProblem& problem, i64 limit,
                                            const SieveOptions& opts) {
    RepSet rs = sieve_representable(problem, limit, opts);
    return {rs.max_exception(), rs.stable_tail()};
}

std::optional<std::vector<i64>> find_tuple(const RepProblem& problem, i64 n) {
    const auto& terms = problem.terms;
    // arguments, not values: remember one argument per term value (sorted map
    // keeps the search deterministic)
    auto args_for = [&](const Term& t) {
        std::map<i64, i64> m;
        const i64 a = t.params.a, b = t.params.b;
        for (i64 x = 0;; ++x) {
            i128 v = t.eval(x);
            if (v >= 0 && v <= i128(n)) m.emplace(narrow_i64(v), x);
            else if (v > i128(n) && 2 * a * x + a + b > 0) break;
        }
        if (problem.domain == Domain::Z)
            for (i64 x = -1;; --x) {
                i128 v = t.eval(x);
                if (v >= 0 && v <= i128(n)) m.emplace(narrow_i64(v), x);
                else if (v > i128(n) && -2 * a * x + a - b > 0) break;
            }
        return m;
    };
    std::vector<std::map<i64, i64>> maps;
    maps.reserve(terms.size());
    for (const Term& t : terms) maps.push_back(args_for(t));

    size_t k = terms.size();
    std::vector<i64> xs(k, 0);
    std::function<bool(size_t, i64)> go = [&](size_t idx, i64 rest) -> bool {
        if (idx == k - 1) {
            auto it = maps[idx].find(rest);
            if (it == maps[idx].end()) return false;
            xs[idx] = it->second;
            return true;
        }
        for (auto& [v, x] : maps[idx]) {
            if (v > rest) break;
            xs[idx] = x;
            if (go(idx + 1, rest - v)) return true;
        }
        return false;
    };
    if (go(0, n)) return xs;
    return std::nullopt;
}

}  // namespace quadrep
