#include <doctest.h>

#include <set>
#include <vector>

#include "hlkit/bijection.hpp"

using namespace hlkit;

namespace {

/// All increasing admissible pairs on the given chain with T_1 empty.
std::vector<AdmissiblePair> pairs_no_first_segment(const LambdaChain& chain) {
    std::vector<AdmissiblePair> out;
    for (const auto& w : all_permutations(static_cast<std::size_t>(chain.n())))
        for_each_admissible(chain, WalkOrientation::increasing, w,
                            [&](const AdmissiblePair& pair, const Permutation&) {
                                for (int p : pair.positions)
                                    if (chain.column_of(p) == 1) return;
                                out.push_back(pair);
                            });
    return out;
}

Permutation end_of(const LambdaChain& chain, const AdmissiblePair& pair) {
    Permutation e = pair.w;
    for (int p : pair.positions)
        e.apply_transposition_inplace(chain.entry(p).a, chain.entry(p).b);
    return e;
}

Permutation composed(const LambdaChain& chain, const AdmissiblePair& pair,
                     int j) {
    // (j,j+1) T (j,j+1) as a permutation product
    Permutation e = Permutation::identity(static_cast<std::size_t>(chain.n()));
    e.apply_transposition_inplace(j, j + 1);
    for (int p : pair.positions)
        e.apply_transposition_inplace(chain.entry(p).a, chain.entry(p).b);
    e.apply_transposition_inplace(j, j + 1);
    return e;
}

}  // namespace

TEST_CASE("phi_j is an involution-paired bijection on (2,2), n = 3") {
    LambdaChain fwd = LambdaChain::lambda_chain(Partition({2, 2}), 3);
    const int j = 1;
    LambdaChain cj = fwd.reversed_reordered(j);
    std::set<std::pair<std::vector<int>, std::vector<int>>> images, domain_l;
    int count_r = 0, count_l = 0;
    for (const auto& pair : pairs_no_first_segment(cj)) {
        Permutation e = end_of(cj, pair);
        bool in_r = pair.w(j) < pair.w(j + 1) && e(j) > e(j + 1);
        bool in_l = pair.w(j) > pair.w(j + 1) && e(j) < e(j + 1);
        if (in_l) {
            ++count_l;
            domain_l.insert({pair.w.word(), pair.positions});
        }
        if (!in_r) continue;
        ++count_r;
        AdmissiblePair mapped = phi_j(cj, pair, PhiDirection::R_to_L);
        // lands in A_j^L
        Permutation me = end_of(cj, mapped);
        CHECK(mapped.w(j) > mapped.w(j + 1));
        CHECK(me(j) < me(j + 1));
        CHECK(mapped.w == pair.w.apply_transposition(j, j + 1));
        CHECK(mapped.positions.size() == pair.positions.size());
        // composition identity: (j,j+1) T' (j,j+1) = T
        CHECK(composed(cj, pair, j) == end_of(cj, {Permutation::identity(3),
                                                   mapped.positions}));
        // content preserved
        CHECK(filling_map(cj, pair, FillingMode::f_reverse).content(3) ==
              filling_map(cj, mapped, FillingMode::f_reverse).content(3));
        // N(w,T) = N(w',T') - 1 with (w,T) on the L side
        CHECK(n_stat(mapped.w, subsequence(cj, mapped.positions)) ==
              n_stat(pair.w, subsequence(cj, pair.positions)) - 1);
        // round trip
        AdmissiblePair back = phi_j(cj, mapped, PhiDirection::L_to_R);
        CHECK(back.w == pair.w);
        CHECK(back.positions == pair.positions);
        images.insert({mapped.w.word(), mapped.positions});
    }
    CHECK(count_l == count_r);
    CHECK(images == domain_l);
}

TEST_CASE("phi_j round trips on (2,2,2), n = 4, all rows") {
    LambdaChain fwd = LambdaChain::lambda_chain(Partition({2, 2, 2}), 4);
    for (int j : {1, 2}) {
        LambdaChain cj = fwd.reversed_reordered(j);
        for (const auto& pair : pairs_no_first_segment(cj)) {
            Permutation e = end_of(cj, pair);
            if (pair.w(j) < pair.w(j + 1) && e(j) > e(j + 1)) {
                AdmissiblePair mapped = phi_j(cj, pair, PhiDirection::R_to_L);
                AdmissiblePair back = phi_j(cj, mapped, PhiDirection::L_to_R);
                CHECK(back.w == pair.w);
                CHECK(back.positions == pair.positions);
            }
            if (pair.w(j) > pair.w(j + 1) && e(j) < e(j + 1)) {
                AdmissiblePair mapped = phi_j(cj, pair, PhiDirection::L_to_R);
                AdmissiblePair back = phi_j(cj, mapped, PhiDirection::R_to_L);
                CHECK(back.w == pair.w);
                CHECK(back.positions == pair.positions);
            }
        }
    }
}

TEST_CASE("phi_j rejects wrong-side input") {
    LambdaChain fwd = LambdaChain::lambda_chain(Partition({2, 2}), 3);
    LambdaChain cj = fwd.reversed_reordered(1);
    // w = 213 has w(1) > w(2); empty T keeps the end equal to w
    CHECK_THROWS_AS(phi_j(cj, {Permutation::parse("213"), {}},
                          PhiDirection::R_to_L),
                    std::domain_error);
    CHECK_THROWS_AS(phi_j(fwd.reversed_reordered(2),
                          {Permutation::parse("123"), {}}, PhiDirection::R_to_L),
                    std::domain_error);  // lambda_2 != lambda_3
}

TEST_CASE("distant phi_j commute") {
    // lambda = (2,2,1,1), n = 5: rows 1 and 3 are both inside equal blocks
    LambdaChain fwd = LambdaChain::lambda_chain(Partition({2, 2, 1, 1}), 5);
    LambdaChain c1 = fwd.reversed_reordered(1);
    LambdaChain c3 = fwd.reversed_reordered(3);
    LambdaChain rev = fwd.reversed();
    auto to_chain = [&](const LambdaChain& c, AdmissiblePair p) {
        for (int& q : p.positions) q = c.position_from_reversed(q);
        std::sort(p.positions.begin(), p.positions.end());
        return p;
    };
    auto to_rev = [&](const LambdaChain& c, AdmissiblePair p) {
        for (int& q : p.positions) q = c.position_in_reversed(q);
        std::sort(p.positions.begin(), p.positions.end());
        return p;
    };
    int checked = 0;
    for (const auto& pair : pairs_no_first_segment(rev)) {
        Permutation e = end_of(rev, pair);
        bool l1 = pair.w(1) > pair.w(2) && e(1) < e(2);
        bool l3 = pair.w(3) > pair.w(4) && e(3) < e(4);
        if (!l1 || !l3) continue;
        ++checked;
        auto step = [&](const LambdaChain& c, const AdmissiblePair& p) {
            return to_rev(c, phi_j(c, to_chain(c, p), PhiDirection::L_to_R));
        };
        AdmissiblePair ab = step(c3, step(c1, pair));
        AdmissiblePair ba = step(c1, step(c3, pair));
        CHECK(ab.w == ba.w);
        CHECK(ab.positions == ba.positions);
    }
    CHECK(checked > 0);
}

TEST_CASE("full bijection reports") {
    BijectionReport r22 = bijection_report(Partition({2, 2}), 3);
    CHECK(r22.pass);
    CHECK(r22.size_l == r22.size_r);
    // regular lambda: both sides coincide and the map is the identity
    BijectionReport r21 = bijection_report(Partition({2, 1}), 3);
    CHECK(r21.pass);
    LambdaChain rev = LambdaChain::lambda_chain(Partition({2, 1}), 3).reversed();
    AdmissiblePair fixed{Permutation::parse("123"), {}};
    AdmissiblePair img = full_bijection(rev, fixed, PhiDirection::L_to_R);
    CHECK(img.w == fixed.w);
    CHECK(img.positions == fixed.positions);
}
