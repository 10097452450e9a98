#include "summa/rational.hpp"

#include "summa/errors.hpp"

#include <doctest.h>

using namespace summa;

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational("-3/6") == Rational(-1, 2));
    CHECK(Rational("4/2").str() == "2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-6, 4).str() == "-3/2");
}

TEST_CASE("string form is p/q with the sign on the numerator") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational("91409924241424243424241924242500").str() ==
          "91409924241424243424241924242500");
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((a + b) * Rational(2) - Rational(1) == Rational(0));
    // no rounding on big values
    Rational big = Rational("123456789123456789/2").pow(3);
    CHECK(big * Rational(8) ==
          Rational("123456789123456789").pow(3));
}

TEST_CASE("powers, including negative exponents") {
    CHECK(Rational(2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(-2).pow(-3) == Rational(-1, 8));
    CHECK(Rational(7).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("division by zero and parse failures throw") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational("1/0"), DomainError);
    CHECK_THROWS_AS(Rational("abc"), DomainError);
    CHECK_THROWS_AS(Rational("1/2/3"), DomainError);
    CHECK_THROWS_AS(Rational(""), DomainError);
    CHECK_THROWS_AS(Rational("1.5"), DomainError);
}

TEST_CASE("binomials and factorials") {
    CHECK(Rational::binomial(4, 2) == Rational(6));
    CHECK(Rational::binomial(10, 0) == Rational(1));
    CHECK(Rational::binomial(12, 4) == Rational(495));
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(10) == Rational(3628800));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 4) <= Rational(1, 2));
}
