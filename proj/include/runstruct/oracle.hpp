#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "runstruct/partition.hpp"

namespace runstruct {

enum class PermKind { Linear, Circular, AtomicRising, AtomicFalling };

/// A word of distinct positive integers with a kind tag. Circular words are
/// normalized to start at their smallest letter.
struct Permutation {
    std::vector<int> word;
    PermKind kind = PermKind::Linear;

    Permutation() = default;
    Permutation(std::vector<int> w, PermKind k) : word(std::move(w)), kind(k) {
        if (word.empty()) throw std::invalid_argument("Permutation: empty word");
        std::set<int> seen(word.begin(), word.end());
        if (seen.size() != word.size())
            throw std::invalid_argument("Permutation: duplicate letters");
        if (kind == PermKind::Circular) {
            if (word.size() < 2) throw std::invalid_argument("Permutation: circular words need length >= 2");
            auto it = std::min_element(word.begin(), word.end());
            std::rotate(word.begin(), it, word.end());
        }
        if (kind == PermKind::AtomicRising || kind == PermKind::AtomicFalling) {
            int lo = *std::min_element(word.begin(), word.end());
            int hi = *std::max_element(word.begin(), word.end());
            bool rising = word.front() == lo && word.back() == hi;
            bool falling = word.front() == hi && word.back() == lo;
            if ((kind == PermKind::AtomicRising && !rising) ||
                (kind == PermKind::AtomicFalling && !falling && word.size() > 1))
                throw std::invalid_argument("Permutation: word does not match atomic kind");
        }
    }

    int size() const { return static_cast<int>(word.size()); }
};

/// One maximal monotone interval [begin .. end] (0-based); length = end - begin.
/// Circular runs may wrap, in which case end exceeds size()-1 and indices are
/// taken mod n.
struct Run {
    int begin;
    int end;
    bool increasing;
    int length() const { return end - begin; }
};

struct RunDecomposition {
    std::vector<Run> runs;
    Partition structure;
};

/// Maximal alternating runs of a permutation. The run lengths partition n-1
/// for linear (and atomic) words and n for circular ones.
inline RunDecomposition run_structure(const Permutation& p) {
    const auto& w = p.word;
    const int n = p.size();
    RunDecomposition out;
    if (p.kind == PermKind::Circular) {
        // Step directions around the circle; d[t] covers (t, t+1 mod n).
        std::vector<bool> up(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) up[t] = w[(t + 1) % n] < w[t] ? false : true;
        // Start at a direction change; one always exists on a cycle of
        // distinct letters.
        int start = -1;
        for (int t = 0; t < n; ++t)
            if (up[t] != up[(t + n - 1) % n]) { start = t; break; }
        if (start < 0) throw std::logic_error("run_structure: monotone cycle");
        std::vector<int> lengths;
        int t = start;
        while (t < start + n) {
            int len = 1;
            while (t + len < start + n && up[(t + len) % n] == up[t % n]) ++len;
            out.runs.push_back({t % n, t % n + len, up[t % n]});
            lengths.push_back(len);
            t += len;
        }
        out.structure = Partition(std::move(lengths));
        return out;
    }
    if (n == 1) return out;
    std::vector<bool> up(static_cast<std::size_t>(n - 1));
    for (int t = 0; t + 1 < n; ++t) up[t] = w[t + 1] > w[t];
    std::vector<int> lengths;
    int t = 0;
    while (t < n - 1) {
        int len = 1;
        while (t + len < n - 1 && up[t + len] == up[t]) ++len;
        out.runs.push_back({t, t + len, up[t]});
        lengths.push_back(len);
        t += len;
    }
    out.structure = Partition(std::move(lengths));
    return out;
}

/// Descent positions {i : sigma(i) > sigma(i+1)} (1-based). Circular words
/// include the wraparound position via sigma(n+1) = sigma(1).
inline std::set<int> descent_set(const Permutation& p) {
    std::set<int> d;
    const auto& w = p.word;
    const int n = p.size();
    int last = p.kind == PermKind::Circular ? n : n - 1;
    for (int i = 1; i <= last; ++i)
        if (w[i - 1] > w[i % n]) d.insert(i);
    return d;
}

/// Number of permutations of [n] with descent set exactly S (Eq.-style
/// inclusion-exclusion over subsets of S).
inline mpz_class beta(const std::vector<int>& S, int n) {
    std::vector<int> s(S);
    std::sort(s.begin(), s.end());
    for (int x : s)
        if (x < 1 || x > n - 1) throw std::invalid_argument("beta: S must be a subset of [n-1]");
    const std::size_t k = s.size();
    mpz_class total = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<long> comp;
        int prev = 0;
        int omitted = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (mask & (std::size_t(1) << b)) {
                comp.push_back(s[b] - prev);
                prev = s[b];
            } else {
                ++omitted;
            }
        }
        comp.push_back(n - prev);
        mpz_class term = multinomial(n, comp);
        total += (omitted % 2 == 0) ? term : -term;
    }
    return total;
}

namespace detail {

inline PermKind atom_kind(const std::vector<int>& w) {
    return w.front() <= w.back() ? PermKind::AtomicRising : PermKind::AtomicFalling;
}

/// Splits word[lo..hi] (inclusive) into inextendible atoms, recording the
/// position range of each atom. Adjacent atoms share their endpoint letter.
inline void decompose_range(const std::vector<int>& w, int lo, int hi,
                            std::vector<std::pair<int, int>>& spans) {
    if (hi - lo + 1 <= 2) {
        spans.emplace_back(lo, hi);
        return;
    }
    auto lo_it = std::min_element(w.begin() + lo, w.begin() + hi + 1);
    auto hi_it = std::max_element(w.begin() + lo, w.begin() + hi + 1);
    int pmin = static_cast<int>(lo_it - w.begin());
    int pmax = static_cast<int>(hi_it - w.begin());
    bool atomic = (pmin == lo && pmax == hi) || (pmax == lo && pmin == hi);
    if (atomic) {
        spans.emplace_back(lo, hi);
        return;
    }
    int cut = (pmax > lo && pmax < hi) ? pmax : pmin;
    decompose_range(w, lo, cut, spans);
    decompose_range(w, cut, hi, spans);
}

}  // namespace detail

/// Unique decomposition of a linear permutation into inextendible atoms;
/// consecutive atoms share their endpoint letter.
inline std::vector<Permutation> decompose_atoms(const Permutation& p) {
    if (p.kind == PermKind::Circular)
        throw std::invalid_argument("decompose_atoms: linear kind required");
    if (p.size() < 2) throw std::invalid_argument("decompose_atoms: need |word| >= 2");
    std::vector<std::pair<int, int>> spans;
    detail::decompose_range(p.word, 0, p.size() - 1, spans);
    std::vector<Permutation> atoms;
    for (auto [a, b] : spans) {
        std::vector<int> sub(p.word.begin() + a, p.word.begin() + b + 1);
        PermKind k = detail::atom_kind(sub);
        atoms.emplace_back(std::move(sub), k);
    }
    return atoms;
}

/// Splits a circular permutation at its maximum into two atoms, using the
/// device of reading it as a linear word over {min, ..., max} closed at min.
inline std::vector<Permutation> decompose_circular(const Permutation& p) {
    if (p.kind != PermKind::Circular)
        throw std::invalid_argument("decompose_circular: circular kind required");
    const auto& w = p.word;
    int pmax = static_cast<int>(std::max_element(w.begin(), w.end()) - w.begin());
    std::vector<int> first(w.begin(), w.begin() + pmax + 1);
    std::vector<int> second(w.begin() + pmax, w.end());
    second.push_back(w.front());
    std::vector<Permutation> atoms;
    atoms.emplace_back(std::move(first), PermKind::AtomicRising);
    atoms.emplace_back(std::move(second), PermKind::AtomicFalling);
    return atoms;
}

struct PrincipalAtom {
    Permutation atom;          ///< inextendible atom holding both min and max
    std::vector<int> prefix;   ///< alpha, letters before the atom
    std::vector<int> suffix;   ///< omega, letters after the atom
    Permutation residual;      ///< alpha . extreme . rho(omega)
};

/// Principal-atom factorisation sigma = alpha . pi . omega together with the
/// residual permutation alpha . min . rho(omega) (rising pi) or
/// alpha . max . rho(omega) (falling pi), where rho reverses the order of the
/// letters of omega within their own set.
inline PrincipalAtom principal_atom(const Permutation& p) {
    if (p.kind == PermKind::Circular)
        throw std::invalid_argument("principal_atom: linear kind required");
    if (p.size() < 2) throw std::invalid_argument("principal_atom: need |word| >= 2");
    const auto& w = p.word;
    int lo = *std::min_element(w.begin(), w.end());
    int hi = *std::max_element(w.begin(), w.end());
    std::vector<std::pair<int, int>> spans;
    detail::decompose_range(w, 0, p.size() - 1, spans);
    for (auto [a, b] : spans) {
        auto begin = w.begin() + a, end = w.begin() + b + 1;
        if (std::find(begin, end, lo) != end && std::find(begin, end, hi) != end) {
            PrincipalAtom out;
            std::vector<int> atom_word(begin, end);
            bool rising = atom_word.front() == lo;
            out.atom = Permutation(atom_word, rising ? PermKind::AtomicRising
                                                     : PermKind::AtomicFalling);
            out.prefix.assign(w.begin(), w.begin() + a);
            out.suffix.assign(w.begin() + b + 1, w.end());
            // rho: i-th smallest of the suffix letters -> i-th largest.
            std::vector<int> sorted(out.suffix);
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> residual = out.prefix;
            residual.push_back(rising ? lo : hi);
            for (int letter : out.suffix) {
                auto idx = std::lower_bound(sorted.begin(), sorted.end(), letter) - sorted.begin();
                residual.push_back(sorted[sorted.size() - 1 - static_cast<std::size_t>(idx)]);
            }
            out.residual = Permutation(std::move(residual), PermKind::Linear);
            return out;
        }
    }
    throw std::logic_error("principal_atom: no atom contains both extremes");
}

/// Ceilings for exhaustive enumeration, adjustable by callers.
struct OracleLimits {
    int linear = 8;
    int circular = 9;
    int atomic = 9;
};

/// Exhaustive run-structure tallies over S_n, C_n or A+_n.
inline std::map<Partition, mpz_class> tally_run_structures(PermKind kind, int n,
                                                           const OracleLimits& limits = {}) {
    auto tally_words = [](std::vector<int> head, std::vector<int> tail, PermKind k) {
        std::map<Partition, mpz_class> counts;
        std::sort(tail.begin(), tail.end());
        do {
            std::vector<int> word = head;
            word.insert(word.end(), tail.begin(), tail.end());
            counts[run_structure(Permutation(word, k)).structure] += 1;
        } while (std::next_permutation(tail.begin(), tail.end()));
        return counts;
    };
    switch (kind) {
        case PermKind::Linear: {
            if (n < 1) throw std::invalid_argument("tally_run_structures: linear needs n >= 1");
            if (n > limits.linear)
                throw std::invalid_argument(
                    "tally_run_structures: n exceeds the brute-force ceiling; use the polynomial route");
            std::vector<int> tail(static_cast<std::size_t>(n));
            std::iota(tail.begin(), tail.end(), 1);
            return tally_words({}, std::move(tail), PermKind::Linear);
        }
        case PermKind::Circular: {
            if (n < 2) throw std::invalid_argument("tally_run_structures: circular needs n >= 2");
            if (n > limits.circular)
                throw std::invalid_argument(
                    "tally_run_structures: n exceeds the brute-force ceiling; use the polynomial route");
            std::vector<int> tail(static_cast<std::size_t>(n - 1));
            std::iota(tail.begin(), tail.end(), 2);
            return tally_words({1}, std::move(tail), PermKind::Circular);
        }
        case PermKind::AtomicRising: {
            if (n < 2) throw std::invalid_argument("tally_run_structures: atomic needs n >= 2");
            if (n > limits.atomic)
                throw std::invalid_argument(
                    "tally_run_structures: n exceeds the brute-force ceiling; use the polynomial route");
            std::map<Partition, mpz_class> counts;
            std::vector<int> mid(static_cast<std::size_t>(n - 2));
            std::iota(mid.begin(), mid.end(), 2);
            do {
                std::vector<int> word{1};
                word.insert(word.end(), mid.begin(), mid.end());
                word.push_back(n);
                counts[run_structure(Permutation(word, PermKind::AtomicRising)).structure] += 1;
            } while (std::next_permutation(mid.begin(), mid.end()));
            return counts;
        }
        default:
            throw std::invalid_argument("tally_run_structures: unsupported kind");
    }
}

/// Number of interior valley positions sigma(i-1) > sigma(i) < sigma(i+1).
inline int count_valleys(const Permutation& p) {
    if (p.kind == PermKind::Circular)
        throw std::invalid_argument("count_valleys: linear kind required");
    int v = 0;
    for (int i = 1; i + 1 < p.size(); ++i)
        if (p.word[i - 1] > p.word[i] && p.word[i] < p.word[i + 1]) ++v;
    return v;
}

/// Valley tallies over all of S_n: result[k] = #permutations with k valleys.
inline std::map<int, mpz_class> tally_valleys(int n) {
    if (n < 1) throw std::invalid_argument("tally_valleys: n must be >= 1");
    std::map<int, mpz_class> counts;
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        counts[count_valleys(Permutation(word, PermKind::Linear))] += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    return counts;
}

}  // namespace runstruct
