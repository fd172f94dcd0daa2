#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "runstruct/partition.hpp"
#include "runstruct/polynomial.hpp"

namespace runstruct {

enum class OperatorKind { D0, Dplus, D };

/// The differential operators on Z[x_1, x_2, ...]:
///   D0 x_i -> x_{i+1} (Leibniz over factors), the degree-preserving part;
///   Dplus x_{i+j} -> x_1 x_i x_j summed over ordered pairs i, j >= 1,
///   the degree-increasing part; D = D0 + Dplus.
/// D0 lengthens one run of the underlying permutation, Dplus splits a run
/// of length i+j into runs of lengths 1, i and j.
inline RunPolynomial apply_operator(OperatorKind kind, const RunPolynomial& poly) {
    RunPolynomial out;
    for (const auto& [p, c] : poly.terms()) {
        for (const auto& [part, mult] : p.distinct_parts()) {
            mpz_class w = c * mult;
            if (kind != OperatorKind::Dplus)
                out.add_term(p.with_part_replaced(part, part + 1), w);
            if (kind != OperatorKind::D0 && part >= 2) {
                for (int i = 1; i < part; ++i)
                    out.add_term(p.with_part_split(part, {1, i, part - i}), w);
            }
        }
    }
    return out;
}

/// Multinomial expansion of D0^n applied to the monomial of m:
///   D0^n x_{i_1} ... x_{i_k}
///     = sum_{j_1+...+j_k = n} binom(n; j_1,...,j_k) x_{i_1+j_1} ... x_{i_k+j_k}.
inline RunPolynomial repeated_d0(const Partition& m, int n) {
    if (n < 0) throw std::invalid_argument("repeated_d0: n must be >= 0");
    RunPolynomial out;
    const auto& base = m.parts();
    std::vector<long> js(base.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == base.size() || base.empty()) {
            if (base.empty()) {
                if (remaining == 0) out.add_term(m, 1);
                return;
            }
            js[idx] = remaining;
            std::vector<int> parts(base.size());
            for (std::size_t t = 0; t < base.size(); ++t)
                parts[t] = base[t] + static_cast<int>(js[t]);
            out.add_term(Partition(std::move(parts)), multinomial(n, js));
            return;
        }
        for (int j = 0; j <= remaining; ++j) {
            js[idx] = j;
            self(self, idx + 1, remaining - j);
        }
    };
    if (base.empty()) {
        if (n == 0) out.add_term(m, 1);
        return out;
    }
    rec(rec, 0, n);
    return out;
}

/// A_1..A_n by the recurrence A_1 = x_1, A_n = D A_{n-1}.
/// result[n] holds A_n; result[0] is unused (zero).
inline std::vector<RunPolynomial> atomic_polys(int n_max) {
    if (n_max < 1) throw std::invalid_argument("atomic_polys: n_max must be >= 1");
    std::vector<RunPolynomial> a(static_cast<std::size_t>(n_max) + 1);
    a[1] = RunPolynomial::variable(1);
    for (int n = 2; n <= n_max; ++n) a[n] = apply_operator(OperatorKind::D, a[n - 1]);
    return a;
}

/// C_2..C_n by the recurrence C_2 = x_1^2, C_n = D C_{n-1}.
/// result[n] holds C_n; indices 0 and 1 are unused.
inline std::vector<RunPolynomial> circular_polys(int n_max) {
    if (n_max < 2) throw std::invalid_argument("circular_polys: n_max must be >= 2");
    std::vector<RunPolynomial> c(static_cast<std::size_t>(n_max) + 1);
    c[2] = RunPolynomial::monomial(Partition{1, 1});
    for (int n = 3; n <= n_max; ++n) c[n] = apply_operator(OperatorKind::D, c[n - 1]);
    return c;
}

/// C_n = sum_{m=1}^{n-1} binom(n-2, m-1) A_m A_{n-m}.
inline RunPolynomial circular_from_atomic(int n, const std::vector<RunPolynomial>& atoms) {
    if (n < 2) throw std::invalid_argument("circular_from_atomic: n must be >= 2");
    if (atoms.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("circular_from_atomic: atoms must contain A_1..A_{n-1}");
    RunPolynomial out;
    for (int m = 1; m <= n - 1; ++m)
        out.add_scaled_product(atoms[m], atoms[n - m], binomial(n - 2, m - 1));
    return out;
}

/// L_0..L_n by the recurrence L_n = 2 sum_{m=1}^{n} binom(n-1, m-1) A_m L_{n-m},
/// L_0 = 1. result[n] holds L_n.
inline std::vector<RunPolynomial> linear_polys(int n_max) {
    if (n_max < 0) throw std::invalid_argument("linear_polys: n_max must be >= 0");
    std::vector<RunPolynomial> l(static_cast<std::size_t>(n_max) + 1);
    l[0] = RunPolynomial::constant(1);
    if (n_max == 0) return l;
    auto atoms = atomic_polys(n_max);
    for (int n = 1; n <= n_max; ++n) {
        RunPolynomial acc;
        for (int m = 1; m <= n; ++m)
            acc.add_scaled_product(atoms[m], l[n - m], binomial(n - 1, m - 1));
        acc *= 2;
        l[n] = std::move(acc);
    }
    return l;
}

/// Coefficient of prod A_{p_i} in the partition-sum form of L_n:
///   2^{|p|} / ord p * binom(n; p). Always an integer.
inline mpz_class faa_coefficient(int n, const Partition& p) {
    if (p.weight() != n) throw std::invalid_argument("faa_coefficient: p must partition n");
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(p.size()));
    mpq_class q(two_pow * multinomial(p), p.symmetry_order());
    q.canonicalize();
    if (q.get_den() != 1)
        throw std::logic_error("faa_coefficient: non-integer coefficient");
    return q.get_num();
}

/// L_n as the partition sum over p of n: sum_p 2^{|p|}/ord(p) binom(n;p) prod A_{p_i}.
inline RunPolynomial linear_polys_faa(int n, const std::vector<RunPolynomial>& atoms) {
    if (n < 0) throw std::invalid_argument("linear_polys_faa: n must be >= 0");
    if (n == 0) return RunPolynomial::constant(1);
    if (atoms.size() < static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("linear_polys_faa: atoms must contain A_1..A_n");
    RunPolynomial out;
    for (const Partition& p : partitions_of(n)) {
        RunPolynomial prod = RunPolynomial::constant(1);
        for (int part : p.parts()) prod *= atoms[part];
        out += faa_coefficient(n, p) * prod;
    }
    return out;
}

/// The degree-3 part of A_n via the closed double sum
///   A_n^(3) = sum_{i+j+k=n} sum_{q=1}^{k}
///             (n-q-1)/(n-q-j) binom(n-q-2; i-1, j-1, k-q) x_i x_j x_k.
inline RunPolynomial atomic_third_degree(int n) {
    if (n < 3) throw std::invalid_argument("atomic_third_degree: n must be >= 3");
    std::map<Partition, mpq_class> acc;
    for (int i = 1; i <= n - 2; ++i) {
        for (int j = 1; j <= n - i - 1; ++j) {
            int k = n - i - j;
            mpq_class coeff = 0;
            for (int q = 1; q <= k; ++q) {
                mpq_class term(n - q - 1, n - q - j);
                term *= multinomial(n - q - 2, {static_cast<long>(i - 1),
                                                static_cast<long>(j - 1),
                                                static_cast<long>(k - q)});
                coeff += term;
            }
            acc[Partition{i, j, k}] += coeff;
        }
    }
    RunPolynomial out;
    for (auto& [p, c] : acc) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("atomic_third_degree: non-integer coefficient");
        out.add_term(p, c.get_num());
    }
    return out;
}

/// The degree-2 and degree-4 parts of C_n from their closed forms:
///   C_n^(2) = sum_m binom(n-2, m-1) x_m x_{n-m};
///   C_n^(4) = sum_{i+j+k+l=n} sum_{q=1}^{k} 2 (n-l-q-1)/(n-l-q-j)
///             binom(n-2, n-l-1) binom(n-l-q-2; i-1, j-1, k-q) x_i x_j x_k x_l.
/// The degree-4 part is returned as the zero polynomial for n < 4.
inline std::pair<RunPolynomial, RunPolynomial> circular_degree_parts(int n) {
    if (n < 2) throw std::invalid_argument("circular_degree_parts: n must be >= 2");
    RunPolynomial second;
    for (int m = 1; m <= n - 1; ++m)
        second.add_term(Partition{m, n - m}, binomial(n - 2, m - 1));

    RunPolynomial fourth;
    if (n >= 4) {
        std::map<Partition, mpq_class> acc;
        for (int l = 1; l <= n - 3; ++l) {
            mpz_class outer = binomial(n - 2, n - l - 1);
            for (int i = 1; i <= n - l - 2; ++i) {
                for (int j = 1; j <= n - l - i - 1; ++j) {
                    int k = n - l - i - j;
                    mpq_class coeff = 0;
                    for (int q = 1; q <= k; ++q) {
                        mpq_class term(2 * (n - l - q - 1), n - l - q - j);
                        term *= multinomial(n - l - q - 2, {static_cast<long>(i - 1),
                                                            static_cast<long>(j - 1),
                                                            static_cast<long>(k - q)});
                        coeff += term;
                    }
                    acc[Partition{i, j, k, l}] += coeff * outer;
                }
            }
        }
        for (auto& [p, c] : acc) {
            c.canonicalize();
            if (c.get_den() != 1)
                throw std::logic_error("circular_degree_parts: non-integer coefficient");
            fourth.add_term(p, c.get_num());
        }
    }
    return {std::move(second), std::move(fourth)};
}

enum class SpecialSeries { NNN, OneNN, OneOneN };

/// Closed forms for Z_A at the three special run structures:
///   NNN:    three runs of length n, by the q-sum (n >= 1);
///   OneNN:  runs {1, n, n}, equal to 2 binom(2n, n) - 1 (n >= 2);
///   OneOneN: runs {1, 1, n}, equal to 2n + 1 (n >= 2).
inline mpz_class z_special_series(SpecialSeries kind, int n) {
    switch (kind) {
        case SpecialSeries::NNN: {
            if (n < 1) throw std::invalid_argument("z_special_series: NNN requires n >= 1");
            mpq_class acc = 0;
            for (int q = 1; q <= n; ++q) {
                mpq_class term(3 * n - q - 1, 2 * n - q);
                term *= multinomial(3 * n - q - 2, {static_cast<long>(n - 1),
                                                    static_cast<long>(n - 1),
                                                    static_cast<long>(n - q)});
                acc += term;
            }
            acc.canonicalize();
            if (acc.get_den() != 1) throw std::logic_error("z_special_series: non-integer value");
            return acc.get_num();
        }
        case SpecialSeries::OneNN:
            if (n < 2) throw std::invalid_argument("z_special_series: OneNN requires n >= 2");
            return 2 * binomial(2 * n, n) - 1;
        case SpecialSeries::OneOneN:
            if (n < 2) throw std::invalid_argument("z_special_series: OneOneN requires n >= 2");
            return 2 * n + 1;
    }
    throw std::logic_error("z_special_series: unknown kind");
}

/// Accelerated route to A_1..A_n using the ring-homomorphism property of
/// exp(lambda D): from A_3 = x_3 + x_1^3,
///   A_{n+3} = D^n x_3 + sum_{a+b+c=n} binom(n; a,b,c) A_{a+1} A_{b+1} A_{c+1}.
/// Agrees term-for-term with the plain recurrence.
inline std::vector<RunPolynomial> atomic_polys_accelerated(int n_max) {
    if (n_max < 1) throw std::invalid_argument("atomic_polys_accelerated: n_max must be >= 1");
    std::vector<RunPolynomial> a(static_cast<std::size_t>(n_max) + 1);
    a[1] = RunPolynomial::variable(1);
    if (n_max >= 2) a[2] = RunPolynomial::variable(2);
    if (n_max >= 3) a[3] = RunPolynomial::variable(3) + RunPolynomial::monomial(Partition{1, 1, 1});
    RunPolynomial dx3 = RunPolynomial::variable(3);  // D^m x_3, advanced stepwise
    for (int n = 4; n <= n_max; ++n) {
        int m = n - 3;
        dx3 = apply_operator(OperatorKind::D, dx3);
        RunPolynomial cube;
        for (int aa = 0; aa <= m; ++aa)
            for (int bb = 0; bb <= m - aa; ++bb) {
                int cc = m - aa - bb;
                cube += multinomial(m, {aa, bb, cc}) * (a[aa + 1] * a[bb + 1] * a[cc + 1]);
            }
        a[n] = dx3 + cube;
    }
    return a;
}

}  // namespace runstruct
