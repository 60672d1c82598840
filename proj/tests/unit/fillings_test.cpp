#include <doctest.h>

#include <algorithm>

#include "hlkit/fillings.hpp"

using namespace hlkit;

namespace {

// the nine content-(2,1,2,1) fillings of shape (2,2,2) with their statistics
struct Listed {
    std::vector<IntSequence> rows;
    int des, cinv;
};

const std::vector<Listed> listed = {
    {{{1, 1}, {3, 2}, {4, 3}}, 2, 0}, {{{3, 2}, {1, 1}, {4, 3}}, 2, 1},
    {{{3, 2}, {4, 3}, {1, 1}}, 2, 2}, {{{1, 1}, {4, 2}, {3, 3}}, 1, 1},
    {{{1, 1}, {3, 3}, {4, 2}}, 1, 1}, {{{3, 3}, {1, 1}, {4, 2}}, 1, 2},
    {{{4, 2}, {1, 1}, {3, 3}}, 1, 2}, {{{4, 2}, {3, 3}, {1, 1}}, 1, 3},
    {{{3, 3}, {4, 2}, {1, 1}}, 1, 3}};

}  // namespace

TEST_CASE("construction and accessors") {
    Partition shape({2, 1});
    Filling f(shape, {{2, 3}, {4}});
    CHECK(f.num_columns() == 2);
    CHECK(f.entry(1, 1) == 2);
    CHECK(f.entry(2, 1) == 3);
    CHECK(f.entry(1, 2) == 4);
    CHECK(f.row(1) == IntSequence{4, 2});
    CHECK(f.row(2) == IntSequence{3});
    CHECK(f == Filling::from_rows(shape, {{4, 2}, {3}}));
    CHECK_THROWS_AS(Filling::from_rows(shape, {{4, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Filling(shape, {{2}, {4}}), std::invalid_argument);
}

TEST_CASE("the nine fillings of shape (2,2,2) with content (2,1,2,1)") {
    Partition shape({2, 2, 2});
    ExponentVector target{2, 1, 2, 1};
    int in_fhat = 0;
    for (const auto& l : listed) {
        Filling f = Filling::from_rows(shape, l.rows);
        CHECK(f.is_valid(4));
        CHECK(f.content(4) == target);
        CHECK(f.des() == l.des);
        CHECK(f.cinv() == l.cinv);
        if (f.is_fhat()) ++in_fhat;
    }
    // only the two terms surviving in the P formula have an increasing
    // rightmost column on the equal-part block {1,2,3}
    CHECK(in_fhat == 2);

    auto all = enumerate_fillings(shape, 4, FillingClass::all_valid);
    int with_target = 0;
    for (const auto& f : all)
        if (f.content(4) == target) ++with_target;
    CHECK(with_target == 9);

    auto fhat = enumerate_fillings(shape, 4, FillingClass::fhat);
    for (const auto& f : fhat) CHECK(f.is_fhat());
    CHECK(std::count_if(fhat.begin(), fhat.end(), [&](const Filling& f) {
              return f.content(4) == target;
          }) == 2);
}

TEST_CASE("attack relation") {
    Partition shape({2, 2});
    // same column repeats are invalid
    CHECK_FALSE(Filling(shape, {{1, 1}, {2, 3}}).is_valid(3));
    // rows must weakly decrease rightward
    CHECK_FALSE(Filling(shape, {{1, 2}, {2, 1}}).is_valid(3));
    // consecutive-column attack: left cell strictly lower, equal entries
    CHECK_FALSE(Filling(shape, {{2, 1}, {3, 2}}).is_valid(4));
    CHECK(Filling(shape, {{2, 1}, {4, 3}}).is_valid(4));
    // the same value directly left is fine (weak decrease, not an attack)
    CHECK(Filling(shape, {{2, 3}, {2, 3}}).is_valid(3));
}

TEST_CASE("cinv matches the direct count") {
    for (const auto& shape : {Partition({2, 2, 1}), Partition({3, 1}),
                              Partition({2, 2, 2}), Partition({3, 2})}) {
        for (const auto& f : enumerate_fillings(shape, 4, FillingClass::all_valid))
            CHECK(f.cinv() == f.cinv_direct());
    }
}

TEST_CASE("fhat equals the full set for distinct parts") {
    Partition shape({2, 1});
    auto all = enumerate_fillings(shape, 3, FillingClass::all_valid);
    auto fhat = enumerate_fillings(shape, 3, FillingClass::fhat);
    CHECK(all.size() == fhat.size());
    CHECK(enumerate_fillings(Partition({1}), 2, FillingClass::all_valid).size() == 2);
}

TEST_CASE("deterministic enumeration order") {
    auto a = enumerate_fillings(Partition({2, 2}), 3, FillingClass::all_valid);
    auto b = enumerate_fillings(Partition({2, 2}), 3, FillingClass::all_valid);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
}
