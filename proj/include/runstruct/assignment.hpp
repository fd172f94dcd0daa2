#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace runstruct {

/// Exact values y_1..y_n of the nested-sum sequence
///   y_n = 2^n sum_{r_{n-1}=0}^{2} sum_{r_{n-2}=0}^{2+r_{n-1}} ...
///         sum_{r_1=0}^{2+r_2} prod_{k=1}^{n-1} (1+r_k),
/// computed by dynamic programming from the innermost sum outwards.
/// g_k(c) = sum_{r=0}^{c} (1+r) g_{k-1}(2+r) with g_0 = 1, y_n = 2^n g_{n-1}(2).
inline std::vector<mpz_class> y_sequence(int n_max) {
    if (n_max < 1) throw std::invalid_argument("y_sequence: n_max must be >= 1");
    std::vector<mpz_class> ys;
    ys.reserve(static_cast<std::size_t>(n_max));
    mpz_class two_pow = 2;
    ys.push_back(two_pow);  // y_1: empty product convention
    for (int n = 2; n <= n_max; ++n) {
        // g_k(c) is needed for c <= 2(n-k), and computing level k reads level
        // k-1 at 2+c <= 2(n-k+1); g_0 = 1 identically.
        std::vector<mpz_class> g(static_cast<std::size_t>(2 * n + 1), 1);
        for (int k = 1; k <= n - 1; ++k) {
            std::size_t width = static_cast<std::size_t>(2 * (n - k)) + 1;
            std::vector<mpz_class> next(width);
            for (std::size_t c = 0; c < width; ++c) {
                mpz_class acc = 0;
                for (std::size_t r = 0; r <= c; ++r)
                    acc += mpz_class(static_cast<long>(1 + r)) * g[2 + r];
                next[c] = acc;
            }
            g = std::move(next);
        }
        two_pow *= 2;
        ys.push_back(two_pow * g[2]);
    }
    return ys;
}

/// Rule mapping variable index i >= 1 to an exact rational, with optional
/// per-index overrides. Named generators realize the substitution families.
class Assignment {
public:
    using Generator = std::function<mpq_class(int)>;

    Assignment(std::string name, Generator gen)
        : name_(std::move(name)), gen_(std::move(gen)) {}

    const std::string& name() const { return name_; }

    mpq_class operator()(int index) const {
        if (index < 1) throw std::invalid_argument("Assignment: index must be >= 1");
        if (auto it = overrides_.find(index); it != overrides_.end()) return it->second;
        if (!gen_) throw std::domain_error("Assignment '" + name_ + "': unresolved index x" +
                                           std::to_string(index));
        return gen_(index);
    }

    void set_override(int index, mpq_class value) { overrides_[index] = std::move(value); }

    /// x_i = 1 for all i.
    static Assignment ones() {
        return Assignment("ones", [](int) { return mpq_class(1); });
    }

    /// x_{2k+1} = (-1)^k Catalan(k), x_{2k} = 0.
    static Assignment catalan_alternating() {
        return Assignment("catalan-alternating", [](int i) {
            if (i % 2 == 0) return mpq_class(0);
            int k = (i - 1) / 2;
            mpz_class cat;
            mpz_bin_uiui(cat.get_mpz_t(), 2ul * k, static_cast<unsigned long>(k));
            cat /= k + 1;
            if (k % 2 == 1) cat = -cat;
            return mpq_class(cat);
        });
    }

    /// x_1 = 1, all other indices 0.
    static Assignment x1_only() {
        return Assignment("x1-only", [](int i) { return mpq_class(i == 1 ? 1 : 0); });
    }

    /// x_n = y_n. Values are computed once and extended on demand.
    static Assignment qft_y() {
        auto cache = std::make_shared<std::vector<mpz_class>>();
        return Assignment("qft-y", [cache](int i) {
            if (static_cast<std::size_t>(i) > cache->size())
                *cache = y_sequence(std::max(i, static_cast<int>(cache->size()) * 2));
            return mpq_class((*cache)[static_cast<std::size_t>(i) - 1]);
        });
    }

    /// Explicit values only; any index outside the map is an error.
    static Assignment from_values(std::map<int, mpq_class> values) {
        Assignment a("explicit", nullptr);
        a.overrides_ = std::move(values);
        return a;
    }

    static Assignment by_name(const std::string& name) {
        if (name == "ones") return ones();
        if (name == "catalan-alternating" || name == "catalan") return catalan_alternating();
        if (name == "x1-only") return x1_only();
        if (name == "qft-y") return qft_y();
        throw std::invalid_argument("Assignment: unknown generator '" + name + "'");
    }

private:
    std::string name_;
    Generator gen_;
    std::map<int, mpq_class> overrides_;
};

}  // namespace runstruct
