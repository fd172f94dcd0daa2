#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <json.hpp>

#include "runstruct/assignment.hpp"
#include "runstruct/partition.hpp"

namespace runstruct {

/// Sparse polynomial in Z[x_1, x_2, ...] whose monomials are indexed by
/// integer partitions. Zero coefficients are never stored; term iteration
/// follows the canonical partition order.
class RunPolynomial {
public:
    using TermMap = std::map<Partition, mpz_class>;

    RunPolynomial() = default;

    static RunPolynomial zero() { return RunPolynomial(); }

    static RunPolynomial constant(mpz_class c) {
        RunPolynomial p;
        p.add_term(Partition{}, std::move(c));
        return p;
    }

    /// The monomial for a single partition, with coefficient 1 by default.
    static RunPolynomial monomial(Partition p, mpz_class c = 1) {
        RunPolynomial r;
        r.add_term(std::move(p), std::move(c));
        return r;
    }

    /// The single variable x_i.
    static RunPolynomial variable(int i) { return monomial(Partition{i}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the monomial for q; 0 if absent.
    mpz_class coefficient(const Partition& q) const {
        auto it = terms_.find(q);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    /// Adds c to the coefficient of p, dropping the term if it cancels.
    void add_term(const Partition& p, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RunPolynomial& operator+=(const RunPolynomial& other) {
        for (const auto& [p, c] : other.terms_) add_term(p, c);
        return *this;
    }

    RunPolynomial& operator-=(const RunPolynomial& other) {
        for (const auto& [p, c] : other.terms_) add_term(p, -c);
        return *this;
    }

    friend RunPolynomial operator+(RunPolynomial a, const RunPolynomial& b) { return a += b; }
    friend RunPolynomial operator-(RunPolynomial a, const RunPolynomial& b) { return a -= b; }

    friend RunPolynomial operator*(const RunPolynomial& a, const RunPolynomial& b) {
        RunPolynomial r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) r.add_term(pa.merged_with(pb), ca * cb);
        return r;
    }

    RunPolynomial& operator*=(const RunPolynomial& other) { return *this = *this * other; }

    /// *this += s * (a * b) without materializing the product.
    void add_scaled_product(const RunPolynomial& a, const RunPolynomial& b, const mpz_class& s) {
        if (s == 0) return;
        for (const auto& [pa, ca] : a.terms_) {
            mpz_class cs = ca * s;
            for (const auto& [pb, cb] : b.terms_) add_term(pa.merged_with(pb), cs * cb);
        }
    }

    RunPolynomial& operator*=(const mpz_class& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    friend RunPolynomial operator*(RunPolynomial a, const mpz_class& s) { return a *= s; }
    friend RunPolynomial operator*(const mpz_class& s, RunPolynomial a) { return a *= s; }

    bool operator==(const RunPolynomial& other) const = default;

    /// Exact value under an assignment; a ring homomorphism into Q.
    mpq_class evaluate(const Assignment& a) const {
        mpq_class total = 0;
        for (const auto& [p, c] : terms_) {
            mpq_class prod = mpq_class(c);
            for (const auto& [part, mult] : p.distinct_parts()) {
                mpq_class v = a(part);
                for (int k = 0; k < mult; ++k) prod *= v;
            }
            total += prod;
        }
        return total;
    }

    /// Sum of all coefficients (evaluation at all-ones).
    mpz_class coefficient_sum() const {
        mpz_class s = 0;
        for (const auto& [p, c] : terms_) s += c;
        return s;
    }

    /// The homogeneous part whose monomials have exactly k factors.
    RunPolynomial degree_part(int k) const {
        RunPolynomial r;
        for (const auto& [p, c] : terms_)
            if (p.size() == k) r.add_term(p, c);
        return r;
    }

    /// True if every monomial has weight w under weight(x_i) = i.
    bool is_weight_homogeneous(int w) const {
        for (const auto& [p, c] : terms_)
            if (p.weight() != w) return false;
        return true;
    }

    /// Largest number of factors among the monomials; 0 for constants.
    int max_degree() const {
        int d = 0;
        for (const auto& [p, c] : terms_) d = std::max(d, p.size());
        return d;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [p, c] : terms_) {
            arr.push_back({{"partition", p.parts()}, {"coeff", c.get_str()}});
        }
        return arr;
    }

    static RunPolynomial from_json(const nlohmann::json& arr) {
        RunPolynomial r;
        for (const auto& term : arr) {
            Partition p(term.at("partition").get<std::vector<int>>());
            r.add_term(p, mpz_class(term.at("coeff").get<std::string>()));
        }
        return r;
    }

    /// Human-readable form, e.g. "x5 + 7 x3 x1^2 + 11 x2^2 x1 + 5 x1^5".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            mpz_class a = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || p.empty()) {
                os << a.get_str();
                if (!p.empty()) os << " ";
            }
            if (!p.empty()) os << p.to_string();
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const RunPolynomial& p) {
    return os << p.to_string();
}

}  // namespace runstruct
