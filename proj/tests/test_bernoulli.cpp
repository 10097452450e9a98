#include "summa/bernoulli.hpp"

#include "oracles.hpp"
#include "summa/errors.hpp"
#include "summa/operators.hpp"

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

TEST_CASE("the classical Bernoulli values") {
    auto t = bernoulli_numbers(14);
    CHECK(t.values[0] == Rational(1));
    CHECK(t.values[1] == Rational(-1, 2));
    CHECK(t.values[2] == Rational(1, 6));
    CHECK(t.values[4] == Rational(-1, 30));
    CHECK(t.values[6] == Rational(1, 42));
    CHECK(t.values[8] == Rational(-1, 30));
    CHECK(t.values[10] == Rational(5, 66));
    CHECK(t.values[12] == Rational(-691, 2730));
    CHECK(t.values[14] == Rational(7, 6));
    CHECK(t.values[3].is_zero());
    CHECK(t.values[5].is_zero());
    CHECK(t.values[7].is_zero());
}

TEST_CASE("the two conventions differ only at index 1") {
    auto minus = bernoulli_numbers(10, Convention::MinusHalf);
    auto plus = bernoulli_numbers(10, Convention::PlusHalf);
    CHECK(minus.values[1] == Rational(-1, 2));
    CHECK(plus.values[1] == Rational(1, 2));
    for (std::size_t n = 0; n <= 10; ++n)
        if (n != 1) CHECK(minus.values[n] == plus.values[n]);
}

TEST_CASE("three independent algorithms agree through index 20") {
    for (auto conv : {Convention::MinusHalf, Convention::PlusHalf}) {
        auto a = bernoulli_numbers(20, conv, BernoulliAlgorithm::FaulhaberExtraction);
        auto b = bernoulli_numbers(20, conv, BernoulliAlgorithm::SeriesInversion);
        auto c = bernoulli_numbers(20, conv, BernoulliAlgorithm::QuadraticRecurrence);
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(a.values[n] == b.values[n]);
            CHECK(b.values[n] == c.values[n]);
        }
    }
}

TEST_CASE("power-sum polynomials") {
    CHECK(faulhaber(0) == Polynomial::monomial(1));
    CHECK(faulhaber(1) == from_strings({"0", "1/2", "1/2"}));
    CHECK(faulhaber(5) ==
          from_strings({"0", "0", "-1/12", "0", "5/12", "1/2", "1/6"}));
    // the 1713 tenth-power computation
    CHECK(faulhaber(10).eval(Rational(1000)) ==
          Rational("91409924241424243424241924242500"));
}

TEST_CASE("power-sum polynomials measure the brute-force sums") {
    for (unsigned r = 0; r <= 10; ++r) {
        Polynomial s = faulhaber(r);
        CHECK(s == discrete_sum(Polynomial::monomial(r)));
        CHECK(s.eval(Rational(25)) == oracles::power_sum_brute(r, 25));
    }
}

TEST_CASE("structure of S_r: S_r(0) = 0, S_r(1) = 1, degree and leading term") {
    for (std::size_t r = 1; r <= 20; ++r) {
        Polynomial s = faulhaber(r);
        CHECK(s.eval(Rational(0)) == Rational(0));
        CHECK(s.eval(Rational(1)) == Rational(1));
        CHECK(s.degree() == r + 1);
        CHECK(s.coeff(r + 1) == Rational(1) / Rational(static_cast<long>(r + 1)));
    }
}

TEST_CASE("Bernoulli polynomials are the derivatives of the power sums") {
    CHECK(bernoulli_polynomial(0) == Polynomial::constant(Rational(1)));
    CHECK(bernoulli_polynomial(1) == from_strings({"1/2", "1"}));
    CHECK(bernoulli_polynomial(2) == from_strings({"1/6", "1", "1"}));
    for (std::size_t r = 0; r <= 20; ++r)
        CHECK(faulhaber(r).derivative() == bernoulli_polynomial(r));
}

TEST_CASE("summation-operator coefficients") {
    auto em = em_coefficients(20);
    CHECK(em.betas[0] == Rational(1));
    CHECK(em.betas[1] == Rational(1, 2));
    CHECK(em.betas[2] == Rational(1, 12));
    CHECK(em.betas[3] == Rational(0));
    CHECK(em.betas[4] == Rational(-1, 720));
    // bootstrap relations
    CHECK(Rational(1) == Rational(2) * em.betas[1]);
    CHECK(em.betas[1] == Rational(3) * em.betas[2] + em.betas[1] * em.betas[1]);
    CHECK((Rational(5) * em.betas[4] + em.betas[2] * em.betas[2]).is_zero());
    // beta_n n! = b_n in the plus convention for n >= 2
    for (std::size_t n = 2; n <= 20; ++n)
        CHECK(em.betas[n] * Rational::factorial(n) ==
              bernoulli_number(n, Convention::PlusHalf));
}

TEST_CASE("polynomial Euler-Maclaurin equals the discrete primitive") {
    CHECK(euler_maclaurin_poly(Polynomial::constant(Rational(1))) ==
          Polynomial::monomial(1));
    CHECK(euler_maclaurin_poly(Polynomial::monomial(2)) ==
          from_strings({"0", "1/6", "1/2", "1/3"}));
    CHECK(euler_maclaurin_poly(Polynomial::monomial(10)) ==
          discrete_sum(Polynomial::monomial(10)));
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = random_poly(rng, 10);
        CHECK(euler_maclaurin_poly(f) == discrete_sum(f));
    }
}

TEST_CASE("kappa is the shift x -> x-1 and is multiplicative") {
    CHECK(kappa_shift(Polynomial::monomial(1), 1) == from_strings({"-1", "1"}));
    CHECK(kappa_shift(Polynomial::constant(Rational(1)), 0) ==
          Polynomial::constant(Rational(1)));
    CHECK(kappa_shift(Polynomial::monomial(2), 2) == from_strings({"1", "-2", "1"}));
    std::mt19937 rng(12);
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_poly(rng, 8);
        std::size_t d = f.is_zero() ? 0 : *f.degree();
        CHECK(kappa_shift(f, d) == f.shifted(Rational(-1)));
    }
    for (int i = 0; i < 10; ++i) {
        Polynomial f = random_poly(rng, 4);
        Polynomial g = random_poly(rng, 4);
        std::size_t df = f.is_zero() ? 0 : *f.degree();
        std::size_t dg = g.is_zero() ? 0 : *g.degree();
        CHECK(kappa_shift(f * g, df + dg) ==
              kappa_shift(f, df) * kappa_shift(g, dg));
    }
}

TEST_CASE("quadratic identity") {
    auto [l2, r2] = quadratic_identity(2);
    CHECK(l2 == Rational(-1, 6));
    CHECK(r2 == Rational(-1, 6));
    auto [l3, r3] = quadratic_identity(3);
    CHECK(l3 == Rational(1, 6));
    CHECK(r3 == Rational(1, 6));
    for (std::size_t n = 2; n <= 20; ++n) {
        auto [lhs, rhs] = quadratic_identity(n);
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(quadratic_identity(1), PreconditionError);
    CHECK_THROWS_AS(quadratic_identity(0), PreconditionError);
}

TEST_CASE("numeric Euler-Maclaurin terminates exactly on polynomials") {
    mpfr_prec_t prec = prec_for_digits(30);
    PolynomialFunction square(Polynomial::monomial(2));
    for (std::size_t corrections : {1u, 2u, 5u}) {
        auto r = euler_maclaurin_numeric(square, 10, corrections, prec);
        // S_2(10) = 385
        CHECK(abs(r.value - Real(385, prec)) < Real::pow10(-35, prec));
        CHECK(r.remainder_estimate.is_zero());
    }
}

TEST_CASE("numeric Euler-Maclaurin on 1/(1+x) against direct summation") {
    mpfr_prec_t prec = prec_for_digits(30);
    ReciprocalShifted f;
    auto r = euler_maclaurin_numeric(f, 100, 3, prec);
    Real direct = oracles::shifted_harmonic(100, prec);
    CHECK(abs(r.value - direct) <= r.remainder_estimate);
    CHECK(r.remainder_estimate.sign() >= 0);
    // corrections = 0 keeps only the integral and boundary terms
    auto r0 = euler_maclaurin_numeric(f, 100, 0, prec);
    Real zero(0L, prec), hundred(100, prec);
    Real expected = f.integral(zero, hundred) +
                    (f.value(hundred) - f.value(zero)) / 2;
    CHECK(r0.value == expected);
}

TEST_CASE("numeric Euler-Maclaurin refuses corrections beyond the oracle") {
    struct Capped final : SmoothFunction {
        Real value(const Real& x) const override {
            return Real(1, x.prec()) / (Real(1, x.prec()) + x);
        }
        Real integral(const Real& a, const Real& b) const override {
            Real one(1, a.prec());
            return log(one + b) - log(one + a);
        }
        Real derivative(std::size_t, const Real& x) const override {
            return Real(0L, x.prec());
        }
        std::size_t max_derivative_order() const override { return 3; }
    };
    Capped f;
    mpfr_prec_t prec = prec_for_digits(20);
    CHECK_NOTHROW(euler_maclaurin_numeric(f, 10, 1, prec));
    CHECK_THROWS_AS(euler_maclaurin_numeric(f, 10, 2, prec), PreconditionError);
}
