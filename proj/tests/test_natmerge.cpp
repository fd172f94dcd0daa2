#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "runstruct/natmerge.hpp"
#include "runstruct/oracle.hpp"

using namespace runstruct;

TEST_CASE("worked example") {
    std::vector<int> input{5, 4, 2, 3, 6, 8, 7, 1, 9};
    auto [sorted, stats] = natural_merge_sort(input);
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK(stats.initial_runs == 4);  // 542 | 368 | 71 | 9
    CHECK(stats.merge_passes == 2);
    CHECK(run_profile(input) == Partition({2, 3, 2, 1}));
}

TEST_CASE("already sorted and reversed inputs") {
    std::vector<int> asc(100);
    std::iota(asc.begin(), asc.end(), 0);
    auto [s1, st1] = natural_merge_sort(asc);
    CHECK(s1 == asc);
    CHECK(st1.initial_runs == 1);
    CHECK(st1.merge_passes == 0);

    std::vector<int> desc(asc.rbegin(), asc.rend());
    auto [s2, st2] = natural_merge_sort(desc);
    CHECK(s2 == asc);
    CHECK(st2.initial_runs == 1);
    CHECK(st2.merge_passes == 0);

    auto [s3, st3] = natural_merge_sort(std::vector<int>{});
    CHECK(s3.empty());
    CHECK(st3.initial_runs == 0);
    auto [s4, st4] = natural_merge_sort(std::vector<int>{7});
    CHECK(s4 == std::vector<int>{7});
    CHECK(st4.initial_runs == 1);
    CHECK(st4.comparisons == 0);
}

TEST_CASE("randomized correctness with duplicates") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(0, 300), val(0, 40);
        std::vector<int> a(static_cast<std::size_t>(len(rng)));
        for (auto& x : a) x = val(rng);
        auto expected = a;
        std::sort(expected.begin(), expected.end());
        auto [sorted, stats] = natural_merge_sort(a);
        CHECK(sorted == expected);
    }
}

TEST_CASE("stats are plausible") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> len(2, 500);
        std::vector<int> a(static_cast<std::size_t>(len(rng)));
        for (auto& x : a) x = static_cast<int>(rng() % 1000);
        auto [sorted, stats] = natural_merge_sort(a);
        const auto n = a.size();
        const auto r = stats.initial_runs;
        CHECK(r >= 1);
        CHECK(r <= n);
        auto passes = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(r))));
        CHECK(stats.merge_passes == passes);
        // n-1 splitting comparisons plus at most n per merge pass
        CHECK(stats.comparisons <= (n - 1) + passes * n);
    }
}

TEST_CASE("run profile on arbitrary words") {
    CHECK(run_profile(std::vector<int>{5, 2, 3, 6, 4, 1, 7, 8}) == Partition({1, 2, 2, 2}));
    CHECK(run_profile(std::vector<int>{1, 2}) == Partition({1}));
    CHECK(run_profile(std::vector<int>{3}) == Partition({}));
    // ties extend the current run
    CHECK(run_profile(std::vector<int>{1, 2, 2, 3}) == Partition({3}));
    CHECK(run_profile(std::vector<int>{2, 2, 1}) == Partition({2}));
}

TEST_CASE("run profile matches the permutation oracle on duplicate-free words") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        do {
            CHECK(run_profile(word) ==
                  run_structure(Permutation(word, PermKind::Linear)).structure);
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("disjoint blocks never outnumber interval runs on duplicate-free input") {
    // a fresh block absorbs the shared endpoint and possibly a whole
    // length-one interval run, so blocks can only be fewer
    std::mt19937 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> len(2, 60);
        std::vector<int> a(static_cast<std::size_t>(len(rng)));
        std::iota(a.begin(), a.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        SortStats stats;
        auto segs = detail::split_runs(a, stats);
        CHECK(segs.size() <= run_profile(a).size());
        CHECK(segs.size() >= (run_profile(a).size() + 1) / 2);
    }
}

TEST_CASE("sorts non-integer element types") {
    std::vector<std::string> words{"pear", "apple", "fig", "date", "cherry"};
    auto [sorted, stats] = natural_merge_sort(words);
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK(stats.initial_runs == 2);  // pear apple | fig date cherry
}
