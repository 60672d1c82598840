#include <doctest.h>

#include <stdexcept>

#include "hlkit/combinatorics.hpp"

using namespace hlkit;

TEST_CASE("sequence statistics") {
    CHECK(inversions({3, 1, 2}) == 2);
    CHECK(inversions({1, 2, 3}) == 0);
    CHECK(inversions({3, 2, 1}) == 3);
    CHECK(inversions({}) == 0);
    CHECK(count_below({4, 1, 5, 2}, 3) == 2);
    CHECK(count_between({1, 2, 3, 4, 5}, 2, 5) == 2);
    CHECK(count_between({1, 2, 3}, 2, 2) == 0);
    CHECK_THROWS_AS(count_between({1}, 3, 2), std::invalid_argument);
}

TEST_CASE("partition basics") {
    Partition p({4, 2, 1});
    CHECK(p.length() == 3);
    CHECK(p.size() == 7);
    CHECK(p.weighted_size() == 2 + 2);  // 0*4 + 1*2 + 2*1
    CHECK(p.conjugate() == Partition({3, 2, 1, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.has_distinct_parts());
    CHECK_FALSE(Partition({2, 2}).has_distinct_parts());
    CHECK(p.part(1) == 4);
    CHECK(p.part(5) == 0);
    CHECK(Partition({3, 0, 0}) == Partition({3}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("4,2,1") == p);
    CHECK(p.padded(5) == std::vector<int>{4, 2, 1, 0, 0});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("equal part blocks include the zero block") {
    Partition p({3, 3, 1});
    auto blocks = p.equal_part_blocks(5);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::pair<int, int>{1, 2});
    CHECK(blocks[1] == std::pair<int, int>{3, 3});
    CHECK(blocks[2] == std::pair<int, int>{4, 5});
    auto trivial = Partition({2, 1}).equal_part_blocks(3);
    CHECK(trivial.size() == 3);
}

TEST_CASE("permutation basics") {
    Permutation w({4, 3, 1, 2});
    CHECK(w.length() == 5);
    CHECK(w(1) == 4);
    CHECK(w.inverse()(4) == 1);
    CHECK(w.inverse().inverse() == w);
    CHECK(w.drops(1, 2));
    CHECK_FALSE(w.drops(3, 4));
    CHECK(w.apply_transposition(1, 2) == Permutation({3, 4, 1, 2}));
    CHECK(w.subword(2, 4) == IntSequence{3, 1, 2});
    // position-permuting action: (w.v)_i = v_{w^{-1}(i)}
    CHECK(w.act({10, 20, 30, 40}) == std::vector<int>{30, 40, 20, 10});
    CHECK(Permutation::parse("4312") == w);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
}

TEST_CASE("length drops match the Bruhat sign test") {
    for (const auto& w : all_permutations(4))
        for (int a = 1; a <= 3; ++a)
            for (int b = a + 1; b <= 4; ++b) {
                Permutation v = w.apply_transposition(a, b);
                CHECK(w.drops(a, b) == (v.length() < w.length()));
            }
}

TEST_CASE("minimal coset representatives") {
    Partition lambda({2, 2});
    auto reps = min_coset_reps(lambda, 3);
    // blocks {1,2} and {3}: 3!/2! = 3 reps
    REQUIRE(reps.size() == 3);
    for (const auto& r : reps) CHECK(r(1) < r(2));
    CHECK(min_coset_rep(Permutation({3, 1, 2}), lambda) == Permutation({1, 3, 2}));
    // trailing zero block is sorted too
    CHECK(min_coset_rep(Permutation({2, 4, 3, 1}), Partition({1})) ==
          Permutation({2, 1, 3, 4}));
    CHECK(min_coset_reps(Partition({3, 2, 1}), 4).size() == 24);
    CHECK(all_permutations(4).size() == 24);
}
