#pragma once

// The exactly-known small polynomials used as ground truth across the test
// suites, entered by hand as (partition, coefficient) lists.

#include <vector>

#include "runstruct/polynomial.hpp"

namespace testdata {

using runstruct::Partition;
using runstruct::RunPolynomial;

inline RunPolynomial make_poly(
    const std::vector<std::pair<std::vector<int>, long>>& terms) {
    RunPolynomial p;
    for (const auto& [parts, coeff] : terms) p.add_term(Partition(parts), coeff);
    return p;
}

inline RunPolynomial A(int n) {
    switch (n) {
        case 1: return make_poly({{{1}, 1}});
        case 2: return make_poly({{{2}, 1}});
        case 3: return make_poly({{{3}, 1}, {{1, 1, 1}, 1}});
        case 4: return make_poly({{{4}, 1}, {{2, 1, 1}, 5}});
        case 5:
            return make_poly({{{5}, 1}, {{3, 1, 1}, 7}, {{2, 2, 1}, 11}, {{1, 1, 1, 1, 1}, 5}});
        case 6:
            return make_poly({{{6}, 1},
                              {{4, 1, 1}, 9},
                              {{2, 2, 2}, 11},
                              {{3, 2, 1}, 38},
                              {{2, 1, 1, 1, 1}, 61}});
        default: throw std::out_of_range("printed A_n");
    }
}

inline RunPolynomial C(int n) {
    switch (n) {
        case 2: return make_poly({{{1, 1}, 1}});
        case 3: return make_poly({{{2, 1}, 2}});
        case 4: return make_poly({{{2, 2}, 2}, {{3, 1}, 2}, {{1, 1, 1, 1}, 2}});
        case 5: return make_poly({{{4, 1}, 2}, {{3, 2}, 6}, {{2, 1, 1, 1}, 16}});
        case 6:
            return make_poly({{{5, 1}, 2},
                              {{4, 2}, 8},
                              {{3, 3}, 6},
                              {{2, 2, 1, 1}, 62},
                              {{3, 1, 1, 1}, 26},
                              {{1, 1, 1, 1, 1, 1}, 16}});
        default: throw std::out_of_range("printed C_n");
    }
}

inline RunPolynomial L(int n) {
    switch (n) {
        case 0: return make_poly({{{}, 1}});
        case 1: return make_poly({{{1}, 2}});
        case 2: return make_poly({{{1, 1}, 4}, {{2}, 2}});
        case 3: return make_poly({{{1, 1, 1}, 10}, {{2, 1}, 12}, {{3}, 2}});
        case 4:
            return make_poly({{{1, 1, 1, 1}, 32},
                              {{2, 1, 1}, 58},
                              {{2, 2}, 12},
                              {{3, 1}, 16},
                              {{4}, 2}});
        case 5:
            return make_poly({{{1, 1, 1, 1, 1}, 122},
                              {{2, 1, 1, 1}, 300},
                              {{2, 2, 1}, 142},
                              {{3, 1, 1}, 94},
                              {{3, 2}, 40},
                              {{4, 1}, 20},
                              {{5}, 2}});
        case 6:
            return make_poly({{{1, 1, 1, 1, 1, 1}, 544},
                              {{2, 1, 1, 1, 1}, 1682},
                              {{3, 1, 1, 1}, 568},
                              {{2, 2, 1, 1}, 1284},
                              {{4, 1, 1}, 138},
                              {{3, 2, 1}, 556},
                              {{2, 2, 2}, 142},
                              {{5, 1}, 24},
                              {{4, 2}, 60},
                              {{3, 3}, 40},
                              {{6}, 2}});
        default: throw std::out_of_range("printed L_n");
    }
}

/// The A-form of L_n: coefficient of prod A_{p_i} keyed by the partition p.
inline std::vector<std::pair<std::vector<int>, long>> L_atom_form(int n) {
    switch (n) {
        case 1: return {{{1}, 2}};
        case 2: return {{{1, 1}, 4}, {{2}, 2}};
        case 3: return {{{1, 1, 1}, 8}, {{2, 1}, 12}, {{3}, 2}};
        case 4: return {{{1, 1, 1, 1}, 16}, {{2, 1, 1}, 48}, {{2, 2}, 12}, {{3, 1}, 16}, {{4}, 2}};
        case 5:
            return {{{1, 1, 1, 1, 1}, 32}, {{2, 1, 1, 1}, 160}, {{2, 2, 1}, 120},
                    {{3, 1, 1}, 80},       {{3, 2}, 40},        {{4, 1}, 20},
                    {{5}, 2}};
        case 6:
            return {{{1, 1, 1, 1, 1, 1}, 64}, {{2, 1, 1, 1, 1}, 480}, {{3, 1, 1, 1}, 320},
                    {{2, 2, 1, 1}, 720},      {{4, 1, 1}, 120},       {{3, 2, 1}, 480},
                    {{2, 2, 2}, 120},         {{5, 1}, 24},           {{4, 2}, 60},
                    {{3, 3}, 40},             {{6}, 2}};
        default: throw std::out_of_range("printed L_n atom form");
    }
}

/// K_n coefficient lists, constant term first.
inline std::vector<long> K(int n) {
    switch (n) {
        case 1: return {1};
        case 2: return {2};
        case 3: return {4, 2};
        case 4: return {8, 16};
        case 5: return {16, 88, 16};
        case 6: return {32, 416, 272};
        default: throw std::out_of_range("printed K_n");
    }
}

}  // namespace testdata
