#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "runstruct/partition.hpp"

namespace runstruct {

struct SortStats {
    std::uint64_t initial_runs = 0;
    std::uint64_t merge_passes = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t element_moves = 0;
};

namespace detail {

template <typename T>
struct Segment {
    std::size_t begin;
    std::size_t end;  // exclusive
    bool descending;
};

/// Disjoint monotone blocks in input order (the sorter's splitting
/// convention: each element belongs to exactly one block). Ties extend the
/// current block.
template <typename T>
std::vector<Segment<T>> split_runs(const std::vector<T>& a, SortStats& stats) {
    std::vector<Segment<T>> segs;
    const std::size_t n = a.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        bool desc = false;
        if (j < n) {
            ++stats.comparisons;
            desc = a[j] < a[i];
            ++j;
            if (desc) {
                while (j < n && (++stats.comparisons, a[j] <= a[j - 1])) ++j;
            } else {
                while (j < n && (++stats.comparisons, !(a[j] < a[j - 1]))) ++j;
            }
        }
        segs.push_back({i, j, desc});
        i = j;
    }
    return segs;
}

/// Merges two ascending segments of src into dst; descending segments are
/// read back-to-front instead of being reversed first.
template <typename T>
void merge_two(const std::vector<T>& src, const Segment<T>& x, const Segment<T>& y,
               std::vector<T>& dst, std::size_t out, SortStats& stats) {
    auto next_index = [](const Segment<T>& s, std::size_t step) {
        return s.descending ? s.end - 1 - step : s.begin + step;
    };
    std::size_t nx = x.end - x.begin, ny = y.end - y.begin;
    std::size_t ix = 0, iy = 0;
    while (ix < nx && iy < ny) {
        ++stats.comparisons;
        const T& vx = src[next_index(x, ix)];
        const T& vy = src[next_index(y, iy)];
        if (vy < vx) {
            dst[out++] = vy;
            ++iy;
        } else {
            dst[out++] = vx;
            ++ix;
        }
        ++stats.element_moves;
    }
    while (ix < nx) {
        dst[out++] = src[next_index(x, ix++)];
        ++stats.element_moves;
    }
    while (iy < ny) {
        dst[out++] = src[next_index(y, iy++)];
        ++stats.element_moves;
    }
}

}  // namespace detail

/// Natural merge sort: seeds the merge with the preexisting monotone blocks
/// of the input and merges them in balanced pairwise passes.
template <typename T>
std::pair<std::vector<T>, SortStats> natural_merge_sort(std::vector<T> input) {
    SortStats stats;
    auto segs = detail::split_runs(input, stats);
    stats.initial_runs = segs.size();
    if (segs.size() <= 1) {
        if (!segs.empty() && segs[0].descending) {
            std::size_t lo = 0, hi = input.size() - 1;
            while (lo < hi) {
                std::swap(input[lo++], input[hi--]);
                stats.element_moves += 2;
            }
        }
        return {std::move(input), stats};
    }
    std::vector<T> buf(input.size());
    std::vector<T>* src = &input;
    std::vector<T>* dst = &buf;
    while (segs.size() > 1) {
        ++stats.merge_passes;
        std::vector<detail::Segment<T>> merged;
        merged.reserve(segs.size() / 2 + 1);
        std::size_t out = 0;
        std::size_t s = 0;
        for (; s + 1 < segs.size(); s += 2) {
            std::size_t begin = out;
            detail::merge_two(*src, segs[s], segs[s + 1], *dst, out, stats);
            out += (segs[s].end - segs[s].begin) + (segs[s + 1].end - segs[s + 1].begin);
            merged.push_back({begin, out, false});
        }
        if (s < segs.size()) {
            // odd run out: copy through (un-reversing if still descending)
            std::size_t begin = out;
            std::size_t len = segs[s].end - segs[s].begin;
            for (std::size_t t = 0; t < len; ++t) {
                (*dst)[out++] = (*src)[segs[s].descending ? segs[s].end - 1 - t
                                                         : segs[s].begin + t];
                ++stats.element_moves;
            }
            merged.push_back({begin, out, false});
        }
        segs = std::move(merged);
        std::swap(src, dst);
    }
    return {std::move(*src), stats};
}

/// Run structure of an arbitrary word under the interval convention: runs are
/// maximal monotone intervals sharing endpoints, each of length j - i. Ties
/// extend the current run. Duplicate-free inputs match the permutation
/// oracle's run_structure.
template <typename T>
Partition run_profile(const std::vector<T>& a) {
    const std::size_t n = a.size();
    std::vector<int> lengths;
    if (n >= 2) {
        std::size_t start = 0;
        int dir = 0;
        for (std::size_t t = 0; t + 1 < n; ++t) {
            int c = a[t + 1] < a[t] ? -1 : (a[t] < a[t + 1] ? 1 : 0);
            if (dir == 0) {
                dir = c;
            } else if (c != 0 && c != dir) {
                lengths.push_back(static_cast<int>(t - start));
                start = t;
                dir = c;
            }
        }
        lengths.push_back(static_cast<int>(n - 1 - start));
    }
    return Partition(std::move(lengths));
}

}  // namespace runstruct
