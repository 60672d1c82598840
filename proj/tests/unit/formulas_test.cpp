#include <doctest.h>

#include "hlkit/formulas.hpp"

using namespace hlkit;

TEST_CASE("one-row trivia") {
    FormulaResult r = p_alcove(Partition({1}), 2);
    CHECK(r.poly.coeff({1, 0}) == TPoly::one());
    CHECK(r.poly.coeff({0, 1}) == TPoly::one());
    CHECK(r.poly.num_terms() == 2);
    // Q_(1) = (1-t)(x1 + x2)
    FormulaResult q = q_hhl(Partition({1}), 2);
    CHECK(q.poly.coeff({1, 0}) == TPoly::one_minus_t());
    CHECK(p_from_q(q.poly, Partition({1}), 2) == r.poly);
    // empty partition
    FormulaResult e = p_alcove(Partition{}, 3);
    CHECK(e.term_count == 1);
    CHECK(e.poly.coeff({0, 0, 0}) == TPoly::one());
}

TEST_CASE("specialization oracles") {
    SymPoly s = schur_ssyt(Partition({1}), 2);
    CHECK(s.coeff({1, 0}) == TPoly::one());
    CHECK(s.coeff({0, 1}) == TPoly::one());
    CHECK(schur_ssyt(Partition({2, 1}), 3).coeff({1, 1, 1}) == TPoly(2));
    SymPoly m = monomial_sym(Partition({2, 2}), 2);
    CHECK(m.num_terms() == 1);
    CHECK(m.coeff({2, 2}) == TPoly::one());
    CHECK(monomial_sym(Partition({2, 1}), 3).num_terms() == 6);
}

TEST_CASE("cross-formula and specializations, small cases") {
    for (auto& [l, n] : std::vector<std::pair<Partition, int>>{
             {Partition({2, 1}), 3},
             {Partition({2, 2}), 3},
             {Partition({3, 1}), 3},
             {Partition({2, 2, 1}), 4}}) {
        CHECK(verify_cross(l, n).pass);
        CHECK(verify_specialize(l, n).pass);
    }
}

TEST_CASE("parallel evaluation is deterministic") {
    Partition lambda({3, 2, 1});
    EnumOptions seq, par;
    par.threads = 4;
    FormulaResult a = p_alcove(lambda, 4, seq);
    FormulaResult b = p_alcove(lambda, 4, par);
    CHECK(a.poly == b.poly);
    CHECK(a.term_count == b.term_count);
    CHECK(a.poly.to_json_string() == b.poly.to_json_string());
}

TEST_CASE("budget enforcement") {
    EnumOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(p_alcove(Partition({3, 2, 1}), 4, opts), BudgetExceeded);
    opts.threads = 3;
    CHECK_THROWS_AS(p_alcove(Partition({3, 2, 1}), 4, opts), BudgetExceeded);
    CHECK_THROWS_AS(q_hhl(Partition({3, 2, 1}), 4, opts), BudgetExceeded);
}

TEST_CASE("compression on regular shapes") {
    CompressionReport rep = compression_report(Partition({2, 1}), 3);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
    CHECK(rep.missed_fillings.empty());
    CHECK(compression_report(Partition({3, 1}), 3).pass);
}

TEST_CASE("rounding") {
    CHECK(round_one_decimal(1044, 366) == "2.9");  // 2.852...
    CHECK(round_one_decimal(1, 2) == "0.5");
    CHECK(round_one_decimal(29, 10) == "2.9");
    CHECK(round_one_decimal(25, 100) == "0.3");  // half rounds up
    CHECK(round_one_decimal(7, 1) == "7.0");
}

TEST_CASE("level identity harness") {
    CHECK(verify_levels(Partition({2, 1}), 3).pass);
    CHECK(verify_levels(Partition({2, 2}), 3).pass);
}

TEST_CASE("segment identities, n = 3") { CHECK(verify_segments(3).pass); }

TEST_CASE("symmetry and homogeneity") {
    for (auto& [l, n] : std::vector<std::pair<Partition, int>>{
             {Partition({2, 1}), 3}, {Partition({2, 2}), 4}}) {
        SymPoly p = p_alcove(l, n).poly;
        CHECK(p.is_homogeneous(l.size()));
        for (int i = 1; i < n; ++i) {
            std::vector<int> sw(n);
            for (int k = 0; k < n; ++k) sw[k] = k + 1;
            std::swap(sw[i - 1], sw[i]);
            CHECK(p.permute_variables(sw) == p);
        }
    }
}
