#include <doctest.h>

#include <algorithm>
#include <set>

#include "hlkit/chains.hpp"

using namespace hlkit;

TEST_CASE("affine reflections") {
    AffineReflection r{{1, 3}, 2};
    CHECK(affine_reflect(r, {5, 0, 1}) == std::vector<int>{3, 0, 3});
    // involution, sum preserved
    std::vector<int> mu{4, 7, 1, 0};
    auto once = affine_reflect({{2, 4}, 3}, mu);
    CHECK(affine_reflect({{2, 4}, 3}, once) == mu);
    CHECK(once[0] + once[1] + once[2] + once[3] == 12);
}

TEST_CASE("omega chains") {
    auto c = omega_chain(2, 4);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Transposition{1, 4});
    CHECK(c[1] == Transposition{1, 3});
    CHECK(c[2] == Transposition{2, 4});
    CHECK(c[3] == Transposition{2, 3});
    CHECK(omega_chain(1, 3) ==
          std::vector<Transposition>{{1, 3}, {1, 2}});
    CHECK_THROWS_AS(omega_chain(3, 3), std::invalid_argument);
}

TEST_CASE("lambda chain for (2,1), n = 4") {
    LambdaChain g = LambdaChain::lambda_chain(Partition({2, 1}), 4);
    CHECK(g.to_string() == "(1,4)(1,3)(1,2)|(1,4)(1,3)(2,4)(2,3)");
    CHECK(g.size() == 7);
    CHECK(g.column_of(1) == 2);
    CHECK(g.column_of(4) == 1);
    // levels count earlier occurrences of the same root
    CHECK(g.level_of(1) == 1);
    CHECK(g.level_of(4) == 2);  // second (1,4)
    CHECK(g.level_of(5) == 2);  // second (1,3)
    CHECK(g.level_of(7) == 1);
    CHECK_THROWS_AS(LambdaChain::lambda_chain(Partition({1, 1, 1}), 3),
                    std::invalid_argument);
}

TEST_CASE("reversed chain") {
    LambdaChain g = LambdaChain::lambda_chain(Partition({2, 1}), 4);
    LambdaChain r = g.reversed();
    CHECK(r.size() == g.size());
    for (int p = 1; p <= g.size(); ++p) {
        CHECK(r.entry(p) == g.entry(g.size() + 1 - p));
        CHECK(r.level_of(p) == g.level_of(g.size() + 1 - p));
    }
    CHECK(r.column_of(1) == 1);
    CHECK(r.to_string() == "(2,3)(2,4)(1,3)(1,4)|(1,2)(1,3)(1,4)");
}

TEST_CASE("reversed reordered chain") {
    // lambda = (2,2), n = 4: both segments have k = 2
    LambdaChain fwd = LambdaChain::lambda_chain(Partition({2, 2}), 4);
    LambdaChain rev = fwd.reversed();
    for (int j : {1, 2, 3}) {
        LambdaChain rj = fwd.reversed_reordered(j);
        CHECK(rj.size() == rev.size());
        // position correspondence is a bijection fixing each segment
        std::vector<bool> hit(rj.size(), false);
        for (int p = 1; p <= rj.size(); ++p) {
            int rp = rj.position_in_reversed(p);
            CHECK(rj.position_from_reversed(rp) == p);
            CHECK_FALSE(hit[rp - 1]);
            hit[rp - 1] = true;
            CHECK(rj.entry(p) == rev.entry(rp));
            CHECK(rj.level_of(p) == rev.level_of(rp));
            CHECK(rj.column_of(p) == rev.column_of(rp));
        }
        // segments are multiset-equal to the reversed chain's
        std::multiset<Transposition> a, b;
        for (int p = 1; p <= rj.size(); ++p) {
            a.insert(rj.entry(p));
            b.insert(rev.entry(p));
        }
        CHECK(a == b);
    }
    // tilde segment is column-major: (k,c),(k-1,c),...,(1,c) for c=k+1..n
    LambdaChain r1 = fwd.reversed_reordered(1);
    CHECK(r1.entry(1) == Transposition{2, 3});
    CHECK(r1.entry(2) == Transposition{1, 3});
    CHECK(r1.entry(3) == Transposition{2, 4});
    CHECK(r1.entry(4) == Transposition{1, 4});
    // for j = 3 (zero block) no segment is reordered
    LambdaChain r3 = fwd.reversed_reordered(3);
    for (int p = 1; p <= r3.size(); ++p) CHECK(r3.entry(p) == rev.entry(p));
}

TEST_CASE("segment helpers") {
    CHECK(segment_gamma(2, 1, 4) ==
          std::vector<Transposition>{{1, 3}, {2, 4}, {2, 3}});
    CHECK(segment_gamma_r(2, 0, 4) ==
          std::vector<Transposition>{{2, 3}, {2, 4}, {1, 3}, {1, 4}});
    CHECK(segment_gamma_r_row(2, 1, 4) ==
          std::vector<Transposition>{{1, 3}, {1, 4}});
}
