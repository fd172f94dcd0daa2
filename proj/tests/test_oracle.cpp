#include <doctest.h>

#include <numeric>

#include "printed_polys.hpp"
#include "runstruct/operators.hpp"
#include "runstruct/oracle.hpp"
#include "runstruct/valleys.hpp"

using namespace runstruct;

namespace {

Permutation linear(std::vector<int> w) { return Permutation(std::move(w), PermKind::Linear); }
Permutation circular(std::vector<int> w) { return Permutation(std::move(w), PermKind::Circular); }

/// True if word[lo..hi] is an atomic subword (min/max of its letters at its
/// ends, in either orientation).
bool is_atomic_span(const std::vector<int>& w, int lo, int hi) {
    auto first = w.begin() + lo, last = w.begin() + hi + 1;
    int mn = *std::min_element(first, last);
    int mx = *std::max_element(first, last);
    return (w[lo] == mn && w[hi] == mx) || (w[lo] == mx && w[hi] == mn);
}

}  // namespace

TEST_CASE("run structure of the running examples") {
    CHECK(run_structure(linear({5, 2, 3, 6, 4, 1, 7, 8})).structure == Partition({1, 2, 2, 2}));
    CHECK(run_structure(circular({1, 4, 5, 3, 6, 7, 8, 2})).structure == Partition({2, 1, 3, 2}));
    CHECK(run_structure(linear({1, 2})).structure == Partition({1}));
    CHECK(run_structure(linear({7})).structure == Partition({}));
    CHECK_THROWS_AS(Permutation({1, 2, 2}, PermKind::Linear), std::invalid_argument);
}

TEST_CASE("run lengths sum correctly and alternate") {
    for (auto& p : {linear({3, 1, 4, 2, 5}), linear({2, 5, 1, 3, 4})}) {
        auto rd = run_structure(p);
        CHECK(rd.structure.weight() == p.size() - 1);
        for (std::size_t i = 1; i < rd.runs.size(); ++i)
            CHECK(rd.runs[i].increasing != rd.runs[i - 1].increasing);
    }
    auto rd = run_structure(circular({1, 4, 5, 3, 6, 7, 8, 2}));
    CHECK(rd.structure.weight() == 8);
}

TEST_CASE("descent sets") {
    CHECK(descent_set(linear({5, 2, 3, 6, 4, 1, 7, 8})) == std::set<int>{1, 4, 5});
    CHECK(descent_set(circular({1, 4, 5, 3, 6, 7, 8, 2})) == std::set<int>{3, 7, 8});
    CHECK(descent_set(linear({1, 2, 3})).empty());
}

TEST_CASE("beta counts permutations by descent set") {
    CHECK(beta({}, 4) == 1);
    CHECK(beta({1}, 3) == 2);
    CHECK(beta({1, 2}, 3) == 1);

    // agreement with direct descent-set tallying, and the sum rule, n <= 7
    for (int n = 1; n <= 7; ++n) {
        std::map<std::set<int>, long> direct;
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        do {
            direct[descent_set(linear(word))] += 1;
        } while (std::next_permutation(word.begin(), word.end()));

        mpz_class total = 0;
        for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
            std::vector<int> S;
            std::set<int> Sset;
            for (int b = 0; b < n - 1; ++b)
                if (mask & (std::size_t(1) << b)) {
                    S.push_back(b + 1);
                    Sset.insert(b + 1);
                }
            mpz_class count = beta(S, n);
            total += count;
            auto it = direct.find(Sset);
            CHECK(count == (it == direct.end() ? 0 : it->second));
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("atomic decomposition examples") {
    auto atoms = decompose_atoms(linear({2, 3, 1}));
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].word == std::vector<int>{2, 3});
    CHECK(atoms[1].word == std::vector<int>{3, 1});

    atoms = decompose_atoms(linear({1, 2}));
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].word == std::vector<int>{1, 2});

    // circular 14532 splits at its maximum into 145 and 5321
    auto catoms = decompose_circular(circular({1, 4, 5, 3, 2}));
    REQUIRE(catoms.size() == 2);
    CHECK(catoms[0].word == std::vector<int>{1, 4, 5});
    CHECK(catoms[0].kind == PermKind::AtomicRising);
    CHECK(catoms[1].word == std::vector<int>{5, 3, 2, 1});
    CHECK(catoms[1].kind == PermKind::AtomicFalling);
}

TEST_CASE("decomposition atoms are inextendible and chain correctly") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        do {
            auto p = linear(word);
            auto atoms = decompose_atoms(p);
            auto again = decompose_atoms(p);
            REQUIRE(atoms.size() == again.size());
            for (std::size_t i = 0; i < atoms.size(); ++i) CHECK(atoms[i].word == again[i].word);

            // atoms cover the word with shared endpoints
            std::size_t covered = atoms[0].word.size();
            for (std::size_t i = 1; i < atoms.size(); ++i) {
                CHECK(atoms[i - 1].word.back() == atoms[i].word.front());
                covered += atoms[i].word.size() - 1;
            }
            CHECK(covered == word.size());

            // inextendibility: no strictly larger span around an atom is
            // itself atomic (atoms are contiguous factors of the word)
            int pos = 0;
            for (const auto& atom : atoms) {
                int lo = pos, hi = pos + static_cast<int>(atom.word.size()) - 1;
                CHECK(is_atomic_span(word, lo, hi));
                for (int a = lo; a >= 0; --a)
                    for (int b = hi; b < n; ++b) {
                        if (a == lo && b == hi) continue;
                        CHECK_FALSE(is_atomic_span(word, a, b));
                    }
                pos = hi;
            }
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("principal atom") {
    auto sorted = principal_atom(linear({1, 2, 3, 4, 5}));
    CHECK(sorted.atom.word == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(sorted.prefix.empty());
    CHECK(sorted.suffix.empty());

    auto pa = principal_atom(linear({3, 1, 4, 2}));
    CHECK(pa.atom.word == std::vector<int>{1, 4});
    CHECK(pa.prefix == std::vector<int>{3});
    CHECK(pa.suffix == std::vector<int>{2});
    CHECK(pa.residual.word == std::vector<int>{3, 1, 2});
}

TEST_CASE("principal-atom factorisation splits the run structure") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        do {
            auto p = linear(word);
            auto pa = principal_atom(p);
            auto combined = run_structure(pa.atom).structure.merged_with(
                run_structure(pa.residual).structure);
            CHECK(combined == run_structure(p).structure);
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("exhaustive tallies at the printed values") {
    auto circ4 = tally_run_structures(PermKind::Circular, 4);
    CHECK(circ4 == std::map<Partition, mpz_class>{
                       {Partition{2, 2}, 2}, {Partition{3, 1}, 2}, {Partition{1, 1, 1, 1}, 2}});

    auto atom5 = tally_run_structures(PermKind::AtomicRising, 5);
    CHECK(atom5 == std::map<Partition, mpz_class>{{Partition{4}, 1}, {Partition{2, 1, 1}, 5}});

    auto lin3 = tally_run_structures(PermKind::Linear, 3);
    CHECK(lin3 == std::map<Partition, mpz_class>{{Partition{2}, 2}, {Partition{1, 1}, 4}});
}

TEST_CASE("tallies equal polynomial coefficients") {
    auto a = atomic_polys(8);
    auto c = circular_polys(8);
    auto l = linear_polys(6);
    for (int n = 2; n <= 8; ++n) {
        auto tally = tally_run_structures(PermKind::Circular, n);
        mpz_class total = 0;
        for (const auto& [p, cnt] : tally) {
            CHECK(cnt == c[n].coefficient(p));
            total += cnt;
        }
        CHECK(total == factorial(n - 1));
        CHECK(tally.size() == c[n].term_count());
    }
    for (int n = 2; n <= 8; ++n) {
        auto tally = tally_run_structures(PermKind::AtomicRising, n);
        mpz_class total = 0;
        for (const auto& [p, cnt] : tally) {
            CHECK(cnt == a[n - 1].coefficient(p));
            total += cnt;
        }
        CHECK(total == factorial(n - 2));
    }
    for (int n = 1; n <= 7; ++n) {
        auto tally = tally_run_structures(PermKind::Linear, n);
        mpz_class total = 0;
        for (const auto& [p, cnt] : tally) {
            CHECK(cnt == l[n - 1].coefficient(p));
            total += cnt;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("ceiling errors point to the polynomial route") {
    OracleLimits limits;
    limits.linear = 5;
    CHECK_THROWS_AS(tally_run_structures(PermKind::Linear, 6, limits), std::invalid_argument);
}

TEST_CASE("valley counting") {
    CHECK(count_valleys(linear({1, 2, 3, 4, 5})) == 0);
    CHECK(count_valleys(linear({2, 1, 3})) == 1);
    auto tally = tally_valleys(4);
    CHECK(tally[0] == 8);
    CHECK(tally[1] == 16);
}

TEST_CASE("valley tallies match K_n for small n") {
    auto rows = valley_table(7);
    for (int n = 1; n <= 7; ++n) {
        auto tally = tally_valleys(n);
        for (int k = 0; k <= rows[n].degree(); ++k) CHECK(tally[k] == rows[n].coeff(k));
        mpz_class total = 0;
        for (const auto& [k, cnt] : tally) total += cnt;
        CHECK(total == factorial(n));
    }
}
