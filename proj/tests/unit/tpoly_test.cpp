#include <doctest.h>

#include <random>

#include "hlkit/tpoly.hpp"

using hlkit::BigInt;
using hlkit::TPoly;

namespace {

TPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9);
    std::vector<BigInt> cs(deg(rng) + 1);
    for (auto& c : cs) c = coef(rng);
    return TPoly(std::move(cs));
}

}  // namespace

TEST_CASE("tpoly basics") {
    CHECK(TPoly::zero().is_zero());
    CHECK(TPoly::zero().degree() == -1);
    CHECK(TPoly::one().is_one());
    CHECK(TPoly::monomial(3, 2) == TPoly{0, 0, 3});
    CHECK(TPoly::one_minus_t() == TPoly{1, -1});
    CHECK(TPoly{0, 1, 0}.degree() == 1);
    CHECK(TPoly::t_quantum(3) == TPoly{1, 1, 1});
    CHECK(TPoly::t_quantum_factorial(0) == TPoly::one());
    // [3]_t! = (1+t)(1+t+t^2) = 1 + 2t + 2t^2 + t^3
    CHECK(TPoly::t_quantum_factorial(3) == TPoly{1, 2, 2, 1});
}

TEST_CASE("tpoly ring axioms on random samples") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        TPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * TPoly::one() == a);
        CHECK(a + TPoly::zero() == a);
        CHECK(a - a == TPoly::zero());
        // evaluation is a ring homomorphism
        BigInt t = trial % 7 - 3;
        CHECK((a * b).eval(t) == a.eval(t) * b.eval(t));
        CHECK((a + b).eval(t) == a.eval(t) + b.eval(t));
    }
}

TEST_CASE("tpoly exact division") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        TPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
    }
    CHECK_THROWS_AS(TPoly({1, 1, 1}).exact_div(TPoly{1, 1}),
                    std::domain_error);
    CHECK_THROWS_AS(TPoly::one().exact_div(TPoly::zero()), std::domain_error);
}

TEST_CASE("tpoly pow and to_string") {
    CHECK(TPoly::one_minus_t().pow(2) == TPoly{1, -2, 1});
    CHECK(TPoly::one_minus_t().pow(0) == TPoly::one());
    CHECK(TPoly::zero().to_string() == "0");
    CHECK(TPoly({BigInt(2), BigInt(0), BigInt(-1)}).to_string() == "2 - t^2");
}
