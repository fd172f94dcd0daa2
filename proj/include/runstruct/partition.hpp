#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace runstruct {

/// Integer partition stored as a non-increasing list of positive parts.
/// Serves as the monomial key x_{p_1} x_{p_2} ... x_{p_m} and as the run
/// structure of a permutation.
class Partition {
public:
    Partition() = default;

    /// Parts are sorted into canonical (non-increasing) order.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }

    /// Number of parts, |p|.
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Sum of the parts.
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Multiplicity p(i): how often i occurs among the parts.
    int multiplicity(int i) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    /// Symmetry order of the parts, ord p = prod over distinct parts of mult!.
    mpz_class symmetry_order() const {
        mpz_class ord = 1;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
            ord *= f;
            i = j;
        }
        return ord;
    }

    /// Distinct parts with their multiplicities, largest part first.
    std::vector<std::pair<int, int>> distinct_parts() const {
        std::vector<std::pair<int, int>> out;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            out.emplace_back(parts_[i], static_cast<int>(j - i));
            i = j;
        }
        return out;
    }

    /// Multiset union of parts (monomial product).
    Partition merged_with(const Partition& other) const {
        std::vector<int> out(parts_.size() + other.parts_.size());
        std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
                   out.begin(), std::greater<int>());
        Partition r;
        r.parts_ = std::move(out);
        return r;
    }

    /// Copy with one occurrence of `from` replaced by `to`; the part must exist.
    Partition with_part_replaced(int from, int to) const {
        Partition r = *this;
        auto it = std::find(r.parts_.begin(), r.parts_.end(), from);
        if (it == r.parts_.end()) throw std::invalid_argument("Partition: part not present");
        *it = to;
        std::sort(r.parts_.begin(), r.parts_.end(), std::greater<int>());
        return r;
    }

    /// Copy with one occurrence of `part` removed and `extra` parts inserted.
    Partition with_part_split(int part, std::initializer_list<int> extra) const {
        std::vector<int> out;
        out.reserve(parts_.size() - 1 + extra.size());
        bool removed = false;
        for (int p : parts_) {
            if (!removed && p == part) { removed = true; continue; }
            out.push_back(p);
        }
        if (!removed) throw std::invalid_argument("Partition: part not present");
        out.insert(out.end(), extra.begin(), extra.end());
        return Partition(std::move(out));
    }

    bool operator==(const Partition& other) const = default;

    /// Canonical term order: by weight, then by degree, then reverse
    /// lexicographic on the part lists (largest leading part first).
    bool operator<(const Partition& other) const {
        int wa = weight(), wb = other.weight();
        if (wa != wb) return wa < wb;
        if (parts_.size() != other.parts_.size()) return parts_.size() < other.parts_.size();
        return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(),
                                            parts_.begin(), parts_.end());
    }

    /// Monomial rendering, e.g. "x3 x1^2"; the empty partition renders "1".
    std::string to_string() const {
        if (parts_.empty()) return "1";
        std::string s;
        for (const auto& [part, mult] : distinct_parts()) {
            if (!s.empty()) s += ' ';
            s += "x" + std::to_string(part);
            if (mult > 1) s += "^" + std::to_string(mult);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

/// All partitions of n in canonical order of generation (largest part first).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Multinomial coefficient n! / (k_1! k_2! ... k_m!); the k_i must sum to n.
inline mpz_class multinomial(long n, const std::vector<long>& ks) {
    mpz_class r = factorial(n);
    long sum = 0;
    for (long k : ks) {
        r /= factorial(k);
        sum += k;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return r;
}

/// Multinomial with respect to the parts of a partition of n.
inline mpz_class multinomial(const Partition& p) {
    std::vector<long> ks(p.parts().begin(), p.parts().end());
    return multinomial(p.weight(), ks);
}

}  // namespace runstruct
