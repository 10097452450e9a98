#include "summa/real.hpp"

#include "oracles.hpp"
#include "summa/complexnum.hpp"
#include "summa/errors.hpp"
#include "summa/series.hpp"
#include "summa/trig.hpp"

#include <doctest.h>

using namespace summa;

TEST_CASE("precision policy") {
    CHECK(prec_for_digits(30) == 152);
    CHECK(prec_for_digits(6) >= 6 * 4 + 32);
    Real a(1, 64), b(1, 200);
    CHECK((a + b).prec() == 200);
}

TEST_CASE("exp(0) is exactly 1") {
    Real z(0L, prec_for_digits(30));
    CHECK(exp(z) == Real(1, prec_for_digits(30)));
}

TEST_CASE("pi against the exact-rational Machin oracle") {
    mpfr_prec_t prec = prec_for_digits(50);
    Real pi = Real::pi(prec);
    Real oracle = oracles::machin_pi(50);
    CHECK(abs(pi - oracle) < Real::pow10(-48, prec));
    // the first 50 digits, as commonly printed
    Real literal("3.14159265358979323846264338327950288419716939937510", prec);
    CHECK(abs(pi - literal) < Real::pow10(-49, prec));
}

TEST_CASE("sin at pi is zero to working precision") {
    for (int digits : {20, 30, 50}) {
        mpfr_prec_t prec = prec_for_digits(digits);
        Real s = sin(Real::pi(prec));
        CHECK(abs(s) < Real::pow10(-(digits + 2), prec));
    }
}

TEST_CASE("domain violations throw instead of returning NaN") {
    mpfr_prec_t prec = prec_for_digits(20);
    CHECK_THROWS_AS(log(Real(0L, prec)), DomainError);
    CHECK_THROWS_AS(log(Real(-1, prec)), DomainError);
    CHECK_THROWS_AS(sqrt(Real(-1, prec)), DomainError);
    CHECK_THROWS_AS(Real(1, prec) / Real(0L, prec), DomainError);
    CHECK_THROWS_AS(cot(Real(0L, prec)), SingularInput);
    CHECK_THROWS_AS(cot(Real::pi(prec)), SingularInput);
    CHECK_THROWS_AS(pow_si(Real(0L, prec), -1), DomainError);
    CHECK_THROWS_AS(Real("not-a-number", prec), DomainError);
}

TEST_CASE("identical inputs give bit-identical results") {
    auto run = [] {
        mpfr_prec_t prec = prec_for_digits(40);
        Real v = exp(sin(Real::pi(prec) / 3)) + log(Real(2, prec));
        return v.str(40);
    };
    CHECK(run() == run());
}

TEST_CASE("more digits never hurt accuracy on the probe set") {
    mpfr_prec_t ref_prec = prec_for_digits(60);
    auto probe = [](mpfr_prec_t prec) {
        std::vector<Real> v;
        v.push_back(Real::pi(prec));
        v.push_back(exp(Real(1, prec)));
        v.push_back(log(Real(2, prec)));
        v.push_back(sin(Real(1, prec)));
        v.push_back(sqrt(Real(2, prec)));
        return v;
    };
    auto reference = probe(ref_prec);
    auto at20 = probe(prec_for_digits(20));
    auto at40 = probe(prec_for_digits(40));
    for (std::size_t i = 0; i < reference.size(); ++i) {
        Real err20 = abs(at_prec(at20[i], ref_prec) - reference[i]);
        Real err40 = abs(at_prec(at40[i], ref_prec) - reference[i]);
        CHECK(err40 <= err20);
    }
}

TEST_CASE("series engine: geometric series") {
    mpfr_prec_t prec = prec_for_digits(40);
    Real eps = Real::pow10(-30, prec);
    auto r = sum_series<Real>([&](long k) { return Real::pow2(-k, prec); },
                              [&](long k) { return Real::pow2(-k, prec); },
                              eps, 1000, Real(0L, prec));
    CHECK(abs(r.value - Real(1, prec)) <= eps);
    CHECK(r.tail_bound <= eps);
    CHECK(r.terms == 100); // 2^-100 is the first bound below 1e-30
}

TEST_CASE("series engine: basel problem at loose tolerance") {
    mpfr_prec_t prec = prec_for_digits(20);
    Real eps = Real::pow10(-6, prec);
    auto r = sum_series<Real>(
        [&](long k) { return Real(1, prec) / (Real(k, prec) * Real(k, prec)); },
        [&](long k) { return Real(1, prec) / Real(k, prec); }, eps, 2000000,
        Real(0L, prec));
    Real z2 = zeta_even(1, 20).value;
    CHECK(abs(r.value - z2) <= eps + r.tail_bound);
    CHECK(r.tail_bound <= eps);
}

TEST_CASE("series engine: nonconvergence carries the best value") {
    mpfr_prec_t prec = prec_for_digits(20);
    Real eps = Real::pow10(-30, prec);
    try {
        sum_series<Real>(
            [&](long k) { return Real(1, prec) / Real(k, prec); },
            [&](long) { return Real(1, prec); }, eps, 50, Real(0L, prec));
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(e.terms == 50);
        CHECK(!e.best_value.empty());
        CHECK(!e.best_bound.empty());
    }
}

TEST_CASE("complex arithmetic and principal branches") {
    mpfr_prec_t prec = prec_for_digits(30);
    Complex i(Real(0L, prec), Real(1, prec));
    Complex one(Real(1, prec), Real(0L, prec));

    CHECK(abs((i * i + one)) < Real::pow10(-30, prec));
    // log(i) = i pi/2 on the principal branch
    Complex li = log(i);
    CHECK(abs(li.re) < Real::pow10(-30, prec));
    CHECK(abs(li.im - Real::pi(prec) / 2) < Real::pow10(-28, prec));
    // sqrt(2i) = 1 + i
    Complex s = sqrt(Complex(Real(0L, prec), Real(2, prec)));
    CHECK(abs(s - Complex(Real(1, prec), Real(1, prec))) < Real::pow10(-28, prec));
    // (1+i)^4 = -4 by binary exponentiation
    Complex p = pow_si(Complex(Real(1, prec), Real(1, prec)), 4);
    CHECK(abs(p - Complex(Real(-4, prec), Real(0L, prec))) < Real::pow10(-28, prec));
    // z / z = 1
    Complex z(Real(3, prec), Real("-0.25", prec));
    CHECK(abs(z / z - one) < Real::pow10(-28, prec));
    CHECK_THROWS_AS(one / Complex(prec), DomainError);
    CHECK_THROWS_AS(log(Complex(prec)), DomainError);
    // exp(log z) = z away from the cut
    CHECK(abs(exp(log(z)) - z) < Real::pow10(-27, prec));
}

TEST_CASE("decimal rendering is deterministic and digit-exact") {
    mpfr_prec_t prec = prec_for_digits(40);
    Real x = Real(1, prec) / Real(3, prec);
    CHECK(x.str(10) == "3.333333333e-01");
    CHECK(Real(0L, prec).str(5) == "0.0000e+00");
    CHECK(Real(-2, prec).str(3) == "-2.00e+00");
}
