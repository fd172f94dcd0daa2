#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "runstruct/operators.hpp"
#include "runstruct/polynomial.hpp"

namespace runstruct {

/// Univariate polynomial in kappa with exact integer coefficients;
/// coeffs[k] is the number of permutations with k valleys.
class ValleyPolynomial {
public:
    ValleyPolynomial() = default;
    explicit ValleyPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static ValleyPolynomial constant(mpz_class c) { return ValleyPolynomial({std::move(c)}); }

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    mpq_class evaluate(const mpq_class& kappa) const {
        mpq_class acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * kappa + *it;
        return acc;
    }

    mpz_class coefficient_sum() const {
        mpz_class s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    bool operator==(const ValleyPolynomial&) const = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (k == 0 || coeffs_[k] != 1) os << coeffs_[k].get_str();
            if (k >= 1) {
                if (coeffs_[k] != 1) os << " ";
                os << "kappa";
                if (k >= 2) os << "^" << k;
            }
        }
        return first ? "0" : os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpz_class> coeffs_;
};

/// K_n(kappa) = kappa^{-1} C_{n+1}(sqrt(kappa), ..., sqrt(kappa)):
/// a monomial of C_{n+1} with 2(k+1) variable factors contributes its
/// coefficient to kappa^k.
inline ValleyPolynomial valley_poly(int n, const RunPolynomial& c_next) {
    if (n < 1) throw std::invalid_argument("valley_poly: n must be >= 1");
    if (!c_next.is_weight_homogeneous(n + 1))
        throw std::invalid_argument("valley_poly: C must have weight n+1");
    std::vector<mpz_class> coeffs;
    for (const auto& [p, c] : c_next.terms()) {
        int deg = p.size();
        if (deg % 2 != 0)
            throw std::domain_error("valley_poly: odd-degree monomial violates circular parity");
        int k = deg / 2 - 1;
        if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(k) + 1);
        coeffs[static_cast<std::size_t>(k)] += c;
    }
    return ValleyPolynomial(std::move(coeffs));
}

/// One step of K_n = 2 kappa (1 - kappa) K_{n-1}' + (2 + (n-2) kappa) K_{n-1}.
inline ValleyPolynomial valley_recurrence_step(const ValleyPolynomial& prev, int n) {
    if (n < 2) throw std::invalid_argument("valley_recurrence_step: n must be >= 2");
    const auto& c = prev.coeffs();
    std::vector<mpz_class> out(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        // from 2 kappa K': 2 k c_k at kappa^k; from -2 kappa^2 K': -2 k c_k at kappa^{k+1}
        out[k] += 2 * static_cast<long>(k) * c[k];
        out[k + 1] -= 2 * static_cast<long>(k) * c[k];
        // from 2 K_{n-1} and (n-2) kappa K_{n-1}
        out[k] += 2 * c[k];
        out[k + 1] += (n - 2) * c[k];
    }
    return ValleyPolynomial(std::move(out));
}

/// K_0..K_n generated purely by the recurrence from K_0 = K_1 = 1.
inline std::vector<ValleyPolynomial> valley_polys_by_recurrence(int n_max) {
    if (n_max < 0) throw std::invalid_argument("valley_polys_by_recurrence: n_max must be >= 0");
    std::vector<ValleyPolynomial> k(static_cast<std::size_t>(n_max) + 1);
    k[0] = ValleyPolynomial::constant(1);
    if (n_max >= 1) k[1] = ValleyPolynomial::constant(1);
    for (int n = 2; n <= n_max; ++n) k[n] = valley_recurrence_step(k[n - 1], n);
    return k;
}

/// V(n, k) table rows 1..n_max via the substitution route.
inline std::vector<ValleyPolynomial> valley_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("valley_table: n_max must be >= 1");
    auto cs = circular_polys(n_max + 1);
    std::vector<ValleyPolynomial> rows(static_cast<std::size_t>(n_max) + 1);
    rows[0] = ValleyPolynomial::constant(1);
    for (int n = 1; n <= n_max; ++n) rows[n] = valley_poly(n, cs[n + 1]);
    return rows;
}

/// Closed form of the bivariate valley generating function,
///   1 - 1/kappa + sqrt(kappa-1)/kappa * tan(nu sqrt(kappa-1) + arctan(1/sqrt(kappa-1))).
/// Only the kappa > 1 branch is supported; the tangent argument must stay
/// clear of pi/2 by `pole_margin`.
inline double kitaev_closed_form(double nu, double kappa, double pole_margin = 1e-6) {
    if (!(kappa > 1.0))
        throw std::domain_error("kitaev_closed_form: kappa must be > 1 (unsupported branch)");
    double s = std::sqrt(kappa - 1.0);
    double arg = nu * s + std::atan(1.0 / s);
    double dist = std::abs(std::remainder(arg - M_PI / 2.0, M_PI));
    if (dist < pole_margin)
        throw std::domain_error("kitaev_closed_form: tangent argument too close to a pole");
    return 1.0 - 1.0 / kappa + (s / kappa) * std::tan(arg);
}

/// Truncated series sum_{n<=order} K_n(kappa) nu^n / n! with exact K_n,
/// used as an independent check on the closed form.
inline double kitaev_series(double nu, const mpq_class& kappa, int order) {
    auto ks = valley_polys_by_recurrence(order);
    mpq_class acc = 0;
    mpq_class nu_q(nu);
    mpq_class pow = 1;
    for (int n = 0; n <= order; ++n) {
        acc += ks[n].evaluate(kappa) * pow / mpq_class(factorial(n));
        pow *= nu_q;
    }
    return acc.get_d();
}

}  // namespace runstruct
