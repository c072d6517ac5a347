#include "doctest.h"
#include "tilecount/exactnum.hpp"
#include "tilecount/qpoly.hpp"

using namespace tilecount;

TEST_CASE("extended binomial conventions") {
    CHECK(binom_ext(-1, 0) == Rational(1));
    CHECK(binom_ext(3, -1) == Rational(0));
    CHECK(binom_ext(4, 2) == Rational(6));
    CHECK(binom_int(0, 0) == 1);
    CHECK(binom_int(2, 5) == 0);   // falling factorial hits zero
    CHECK(binom_int(-2, 2) == 3);  // (-2)(-3)/2
    CHECK(binom_int(-1, 3) == -1);
}

TEST_CASE("q-binomials") {
    CHECK(q_binom(2, 1) == QPoly::from_coeffs({1, 1}));
    CHECK(q_binom(3, 1) == QPoly::from_coeffs({1, 1, 1}));
    CHECK(q_binom(4, 2).eval_at_one() == 6);
    CHECK(q_binom(3, 5).is_zero());
    CHECK(q_binom(3, -1).is_zero());
    for (long a = 0; a <= 20; ++a)
        for (long b = 0; b <= a; ++b)
            CHECK(q_binom(a, b).eval_at_one() == binom_int(a, b));
}

TEST_CASE("hyperfactorials") {
    CHECK(hyperfactorial(0) == 1);
    CHECK(hyperfactorial(1) == 1);
    CHECK(hyperfactorial(3) == 2);
    CHECK(hyperfactorial(4) == 12);
    for (long n = 0; n <= 40; ++n)
        CHECK(hyperfactorial(n + 1) == hyperfactorial(n) * factorial(n));
}

TEST_CASE("skipping hyperfactorial and its double-factorial recursions") {
    CHECK(hyperfactorial2(0) == 1);
    CHECK(hyperfactorial2(1) == 1);
    CHECK(hyperfactorial2(5) == 6);
    CHECK(hyperfactorial2(6) == 48);
    for (long x = 0; 2 * x + 2 <= 40; ++x)
        CHECK(hyperfactorial2(2 * x + 2) ==
              double_factorial(2 * x) * hyperfactorial2(2 * x + 1));
    for (long x = 0; 2 * x + 1 <= 40; ++x)
        CHECK(hyperfactorial2(2 * x + 1) ==
              double_factorial(2 * x - 1) * hyperfactorial2(2 * x));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(5, 0) == 1);
    CHECK(pochhammer(-2, 3) == 0);
    CHECK(pochhammer(3, 2) == 12);
    CHECK(pochhammer(-4, 3) == -24);
}

TEST_CASE("rational helpers") {
    CHECK(make_rational(Integer(3), Integer(6)) == make_rational(Integer(1), Integer(2)));
    CHECK(make_rational(Integer(1), Integer(-2)).get_den() == 2);
    CHECK_THROWS_AS(to_integer(make_rational(Integer(1), Integer(2))), parameter_error);
    CHECK_THROWS_AS(to_count(Rational(-3)), parameter_error);
    CHECK(to_count(Rational(7)) == 7);
}

TEST_CASE("qpoly arithmetic and exact division") {
    QPoly a = QPoly::from_coeffs({1, 2, 1});  // (1+q)^2
    QPoly b = QPoly::from_coeffs({1, 1});
    CHECK(a.divexact(b) == b);
    CHECK((b * b) == a);
    CHECK_THROWS_AS(a.divexact(QPoly::from_coeffs({1, 0, 1})), parameter_error);
    CHECK((a - a).is_zero());
    CHECK(a.coeff_list() == "[1, 2, 1]");
    CHECK(QPoly().coeff_list() == "[0]");
    CHECK(a.str() == "1 + 2q + q^2");
}
