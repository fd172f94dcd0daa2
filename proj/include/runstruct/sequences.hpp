#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "runstruct/assignment.hpp"
#include "runstruct/operators.hpp"
#include "runstruct/polynomial.hpp"

namespace runstruct {

/// Zigzag (Euler up/down) numbers 1, 1, 1, 2, 5, 16, 61, 272, ... computed by
/// the boustrophedon transform of the Entringer triangle. Independent of the
/// polynomial machinery.
inline std::vector<mpz_class> zigzag_numbers(int count) {
    if (count < 1) throw std::invalid_argument("zigzag_numbers: count must be >= 1");
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<mpz_class> row{1};
    out.push_back(1);
    for (int n = 1; n < count; ++n) {
        std::vector<mpz_class> next(static_cast<std::size_t>(n) + 1);
        next[0] = 0;
        for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[static_cast<std::size_t>(n - k)];
        row = std::move(next);
        out.push_back(row.back());
    }
    return out;
}

/// Secant numbers S_0..S_n: Maclaurin coefficients of sec, sec x = sum S_n x^{2n}/(2n)!.
inline std::vector<mpz_class> secant_numbers(int n_max) {
    if (n_max < 0) throw std::invalid_argument("secant_numbers: n_max must be >= 0");
    auto zz = zigzag_numbers(2 * n_max + 1);
    std::vector<mpz_class> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(zz[static_cast<std::size_t>(2 * n)]);
    return out;
}

/// Tangent numbers T_1..T_n: tan x = T_1 x + T_2 x^3/3! + T_3 x^5/5! + ...
/// result[n] holds T_n; result[0] is unused (zero).
inline std::vector<mpz_class> tangent_numbers(int n_max) {
    if (n_max < 1) throw std::invalid_argument("tangent_numbers: n_max must be >= 1");
    auto zz = zigzag_numbers(2 * n_max);
    std::vector<mpz_class> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) out[n] = zz[static_cast<std::size_t>(2 * n - 1)];
    return out;
}

/// Truncated formal power series with exact rational coefficients,
/// coeffs[k] = [lambda^k]. Only what the series oracles need.
struct RationalSeries {
    std::vector<mpq_class> coeffs;

    explicit RationalSeries(int order) : coeffs(static_cast<std::size_t>(order) + 1, 0) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    mpq_class at(int k) const {
        return k >= 0 && k <= order() ? coeffs[static_cast<std::size_t>(k)] : mpq_class(0);
    }

    RationalSeries operator*(const RationalSeries& other) const {
        RationalSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            if (coeffs[i] == 0) continue;
            for (int j = 0; i + j <= order(); ++j)
                r.coeffs[i + j] += coeffs[i] * other.at(j);
        }
        return r;
    }

    RationalSeries operator+(const RationalSeries& other) const {
        RationalSeries r(order());
        for (int i = 0; i <= order(); ++i) r.coeffs[i] = coeffs[i] + other.at(i);
        return r;
    }

    /// Multiplicative inverse; requires a unit constant term.
    RationalSeries inverse() const {
        if (coeffs[0] == 0) throw std::domain_error("RationalSeries: constant term is zero");
        RationalSeries r(order());
        r.coeffs[0] = 1 / coeffs[0];
        for (int k = 1; k <= order(); ++k) {
            mpq_class acc = 0;
            for (int j = 1; j <= k; ++j) acc += coeffs[j] * r.coeffs[k - j];
            r.coeffs[k] = -acc / coeffs[0];
        }
        return r;
    }

    static RationalSeries cos(int order) {
        RationalSeries s(order);
        for (int k = 0; 2 * k <= order; ++k) {
            mpq_class c(1, factorial(2 * k));
            s.coeffs[2 * k] = (k % 2 == 0) ? c : -c;
        }
        return s;
    }

    static RationalSeries sin(int order) {
        RationalSeries s(order);
        for (int k = 0; 2 * k + 1 <= order; ++k) {
            mpq_class c(1, factorial(2 * k + 1));
            s.coeffs[2 * k + 1] = (k % 2 == 0) ? c : -c;
        }
        return s;
    }

    static RationalSeries sec(int order) { return cos(order).inverse(); }
    static RationalSeries tan(int order) { return sin(order) * sec(order); }

    /// (1 - scale*lambda)^alpha expanded by the derivative recurrence
    /// c_{k+1} = c_k (alpha - k)(-scale)/(k + 1).
    static RationalSeries binomial_power(const mpq_class& alpha, const mpq_class& scale, int order) {
        RationalSeries s(order);
        s.coeffs[0] = 1;
        for (int k = 0; k < order; ++k)
            s.coeffs[k + 1] = s.coeffs[k] * (alpha - k) * (-scale) / (k + 1);
        return s;
    }
};

/// Cumulants kappa_1..kappa_n under an assignment: kappa_1 = 0 and
/// kappa_n = C_n(values)/2 for n >= 2. result[n] holds kappa_n.
inline std::vector<mpq_class> cumulants(int n_max, const Assignment& a) {
    if (n_max < 2) throw std::invalid_argument("cumulants: n_max must be >= 2");
    auto cs = circular_polys(n_max);
    std::vector<mpq_class> out(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 2; n <= n_max; ++n) out[n] = cs[n].evaluate(a) / 2;
    return out;
}

/// Difference between the truncated cumulant series sum kappa_n lambda^n/n!
/// (qft-y values) and -lambda/6 - ln(1-12 lambda)/72 at the given lambda.
inline double cumulant_mgf_gap(double lambda, int order = 15) {
    auto ks = cumulants(order, Assignment::qft_y());
    double series = 0.0;
    for (int n = 2; n <= order; ++n)
        series += ks[n].get_d() * std::pow(lambda, n) / factorial(n).get_d();
    double closed = -lambda / 6.0 - std::log(1.0 - 12.0 * lambda) / 72.0;
    return std::abs(series - closed);
}

enum class ConjectureFamily { QftY, Catalan, X1Only, Ones };

inline ConjectureFamily conjecture_family_by_name(const std::string& name) {
    if (name == "qft-y") return ConjectureFamily::QftY;
    if (name == "catalan" || name == "catalan-alternating") return ConjectureFamily::Catalan;
    if (name == "x1-only") return ConjectureFamily::X1Only;
    if (name == "ones") return ConjectureFamily::Ones;
    throw std::invalid_argument("conjecture family: unknown name '" + name + "'");
}

struct ConjectureRow {
    int n;
    std::string quantity;  ///< e.g. "A_5"
    mpq_class expected;
    mpq_class computed;
    bool consistent;
};

/// Per-n comparison of A/C/L evaluations against the target coefficients of
/// the conjectured generating functions. Targets come from closed forms or
/// independent series oracles, never from the polynomials themselves.
inline std::vector<ConjectureRow> conjecture_report(ConjectureFamily family, int n_max) {
    if (n_max < 1) throw std::invalid_argument("conjecture_report: n_max must be >= 1");
    std::vector<ConjectureRow> rows;
    auto push = [&rows](int n, std::string quantity, mpq_class expected, mpq_class computed) {
        bool ok = expected == computed;
        rows.push_back({n, std::move(quantity), std::move(expected), std::move(computed), ok});
    };
    switch (family) {
        case ConjectureFamily::QftY: {
            auto a = Assignment::qft_y();
            auto atoms = atomic_polys(n_max + 1);
            auto circ = circular_polys(n_max + 2);
            auto lin = linear_polys(n_max);
            auto lseries = RationalSeries::binomial_power(mpq_class(-1, 3), 12, n_max);
            mpz_class pow12 = 1;
            for (int n = 0; n <= n_max; ++n) {
                if (n >= 1)
                    push(n, "A_" + std::to_string(n + 1), mpq_class(2 * pow12 * factorial(n)),
                         atoms[n + 1].evaluate(a));
                push(n, "C_" + std::to_string(n + 2), mpq_class(4 * pow12 * factorial(n + 1)),
                     circ[n + 2].evaluate(a));
                push(n, "L_" + std::to_string(n), mpq_class(factorial(n)) * lseries.at(n),
                     lin[n].evaluate(a));
                pow12 *= 12;
            }
            break;
        }
        case ConjectureFamily::Catalan: {
            auto a = Assignment::catalan_alternating();
            auto atoms = atomic_polys(n_max);
            auto circ = circular_polys(std::max(n_max, 2));
            auto lin = linear_polys(n_max);
            mpz_class pow2 = 2;
            for (int n = 1; n <= n_max; ++n) {
                push(n, "A_" + std::to_string(n), mpq_class(n == 1 ? 1 : 0), atoms[n].evaluate(a));
                if (n >= 2)
                    push(n, "C_" + std::to_string(n), mpq_class(n == 2 ? 1 : 0), circ[n].evaluate(a));
                push(n, "L_" + std::to_string(n), mpq_class(pow2), lin[n].evaluate(a));
                pow2 *= 2;
            }
            break;
        }
        case ConjectureFamily::X1Only: {
            auto a = Assignment::x1_only();
            auto atoms = atomic_polys(n_max);
            auto circ = circular_polys(std::max(n_max, 2));
            auto lin = linear_polys(n_max);
            auto sec = RationalSeries::sec(n_max);
            auto sec2 = sec * sec;
            auto sectan = sec + RationalSeries::tan(n_max);
            auto lhs = sectan * sectan;
            for (int n = 1; n <= n_max; ++n) {
                push(n, "A_" + std::to_string(n), mpq_class(factorial(n - 1)) * sec.at(n - 1),
                     atoms[n].evaluate(a));
                if (n >= 2)
                    push(n, "C_" + std::to_string(n), mpq_class(factorial(n - 2)) * sec2.at(n - 2),
                         circ[n].evaluate(a));
                push(n, "L_" + std::to_string(n), mpq_class(factorial(n)) * lhs.at(n),
                     lin[n].evaluate(a));
            }
            break;
        }
        case ConjectureFamily::Ones: {
            auto a = Assignment::ones();
            auto atoms = atomic_polys(n_max);
            auto circ = circular_polys(std::max(n_max, 2));
            auto lin = linear_polys(n_max);
            for (int n = 1; n <= n_max; ++n) {
                push(n, "A_" + std::to_string(n), mpq_class(factorial(n - 1)), atoms[n].evaluate(a));
                if (n >= 2)
                    push(n, "C_" + std::to_string(n), mpq_class(factorial(n - 1)), circ[n].evaluate(a));
                push(n, "L_" + std::to_string(n), mpq_class(factorial(n + 1)), lin[n].evaluate(a));
            }
            break;
        }
    }
    return rows;
}

}  // namespace runstruct
