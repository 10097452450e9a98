#include "summa/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace summa;

namespace {

Polynomial from_strings(std::initializer_list<const char*> coeffs) {
    std::vector<Rational> c;
    for (const char* s : coeffs) c.emplace_back(s);
    return Polynomial(std::move(c));
}

Polynomial random_poly(std::mt19937& rng, std::size_t max_degree) {
    std::size_t deg = rng() % (max_degree + 1);
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 19) - 9);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("canonical form trims trailing zeros; zero has no degree") {
    Polynomial p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == std::size_t{0});
    CHECK(Polynomial().degree() == std::nullopt);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial(std::vector<Rational>{Rational(0)}).is_zero());
    CHECK(from_strings({"0", "1"}) == Polynomial::monomial(1));
}

TEST_CASE("exact Horner evaluation") {
    // x^3/3 + x^2/2 + x/6 at 3 is the power sum 1+4+9
    Polynomial s2 = from_strings({"0", "1/6", "1/2", "1/3"});
    CHECK(s2.eval(Rational(3)) == Rational(14));
    CHECK(Polynomial().eval(Rational(123)) == Rational(0));
    CHECK(Polynomial::monomial(2).eval(Rational(2, 3)) == Rational(4, 9));
}

TEST_CASE("derivative basics") {
    CHECK(Polynomial::monomial(2).derivative() ==
          Polynomial::monomial(1, Rational(2)));
    CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());
}

TEST_CASE("antiderivative basics") {
    CHECK(Polynomial::constant(Rational(1)).antiderivative() ==
          Polynomial::monomial(1));
    CHECK(Polynomial::monomial(1).antiderivative() ==
          Polynomial::monomial(2, Rational(1, 2)));
}

TEST_CASE("derivative of antiderivative is the identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, 8);
        CHECK(p.antiderivative().derivative() == p);
        CHECK(p.antiderivative().eval(Rational(0)) == Rational(0));
    }
}

TEST_CASE("taylor shift") {
    // (x-1)^2 = x^2 - 2x + 1
    CHECK(Polynomial::monomial(2).shifted(Rational(-1)) ==
          from_strings({"1", "-2", "1"}));
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = random_poly(rng, 6);
        // shifting by c then -c is the identity
        CHECK(p.shifted(Rational(3)).shifted(Rational(-3)) == p);
        // evaluation commutes with the shift
        CHECK(p.shifted(Rational(2)).eval(Rational(5)) == p.eval(Rational(7)));
    }
}

TEST_CASE("ring operations agree with evaluation") {
    std::mt19937 rng(9);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_poly(rng, 5);
        Polynomial b = random_poly(rng, 5);
        Rational x(static_cast<long>(rng() % 11) - 5);
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("human-readable rendering") {
    CHECK(from_strings({"0", "1/6", "1/2", "1/3"}).str() ==
          "1/3 x^3 + 1/2 x^2 + 1/6 x");
    CHECK(from_strings({"-1", "0", "1"}).str() == "x^2 - 1");
    CHECK(Polynomial().str() == "0");
}
