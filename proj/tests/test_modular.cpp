#include "summa/modular.hpp"

#include "oracles.hpp"
#include "summa/bernoulli.hpp"
#include "summa/errors.hpp"

#include <doctest.h>

using namespace summa;

namespace {

Real eps30(mpfr_prec_t prec) { return Real::pow10(-34, prec); }

Tau tau_from(const char* re, const char* im, mpfr_prec_t prec) {
    return Tau(Complex(Real(Rational(re), prec), Real(Rational(im), prec)));
}

} // namespace

TEST_CASE("tau requires a positive imaginary part") {
    mpfr_prec_t prec = prec_for_digits(20);
    CHECK_THROWS_AS(tau_from("0", "-1", prec), PreconditionError);
    CHECK_THROWS_AS(tau_from("1", "0", prec), PreconditionError);
    Tau t = tau_from("1/2", "1", prec);
    Tau s = t.inverted_negated();
    CHECK(s.value().im.sign() > 0);
}

TEST_CASE("lambert sums against the closed forms") {
    mpfr_prec_t prec = prec_for_digits(30);
    Real eps = eps30(prec);
    Real pi = Real::pi(prec);
    // p = 1, a = 1: 1/24 - 1/(8 pi)
    auto r = lambert_sum(1, Real(1, prec), eps, 100000);
    Real closed = Real(Rational(1, 24), prec) - Real(1, prec) / (8 * pi);
    CHECK(abs(r.value - closed) < Real::pow10(-26, prec));
    CHECK(r.tail_bound <= eps);
    // p = 5, a = 1: 1/504
    auto r5 = lambert_sum(5, Real(1, prec), eps, 100000);
    CHECK(abs(r5.value - Real(Rational(1, 504), prec)) < Real::pow10(-26, prec));
    // decay in a: at a = 10 the first term alone is ~5e-28
    auto r10 = lambert_sum(1, Real(10, prec), eps, 100000);
    CHECK(r10.value < Real::pow10(-27, prec));
    auto r2 = lambert_sum(1, Real(2, prec), eps, 100000);
    CHECK(r10.value < r2.value);
    CHECK(r2.value < r.value);
    CHECK_THROWS_AS(lambert_sum(1, Real(0L, prec), eps, 100), DomainError);
    CHECK_THROWS_AS(lambert_sum(1, Real(-1, prec), eps, 100), DomainError);
}

TEST_CASE("schlomilch residual") {
    mpfr_prec_t prec = prec_for_digits(30);
    Real eps = eps30(prec);
    for (const char* a : {"1", "2", "1/2", "5"}) {
        Real r = schlomilch_residual(Real(Rational(a), prec), eps, 100000);
        CHECK(r < Real::pow10(-27, prec));
    }
    // the identity is symmetric under a <-> 1/a; with exact dyadic input the
    // two evaluations are the same floating computation
    Real ra = schlomilch_residual(Real(2, prec), eps, 100000);
    Real rb = schlomilch_residual(Real(Rational(1, 2), prec), eps, 100000);
    CHECK(ra == rb);
}

TEST_CASE("ramanujan closed forms") {
    auto r3 = ramanujan_check(3, 30, 100000);
    CHECK(r3.closed == Rational(1, 504));
    CHECK(r3.residual < Real::pow10(-26, r3.series.prec()));
    auto r5 = ramanujan_check(5, 30, 100000);
    CHECK(r5.closed == Rational(1, 264));
    CHECK(r5.residual < Real::pow10(-26, r5.series.prec()));
    auto r7 = ramanujan_check(7, 30, 100000);
    CHECK(r7.closed == Rational(1, 24));
    CHECK(r7.residual < Real::pow10(-26, r7.series.prec()));
    CHECK_THROWS_AS(ramanujan_check(1, 30, 1000), PreconditionError);
    CHECK_THROWS_AS(ramanujan_check(4, 30, 1000), PreconditionError);
}

TEST_CASE("dedekind eta at purely imaginary tau is real and positive") {
    mpfr_prec_t prec = prec_for_digits(30);
    Real eps = eps30(prec);
    Complex eta_i = dedekind_eta(tau_from("0", "1", prec), eps, 10000);
    CHECK(eta_i.re.sign() > 0);
    CHECK(abs(eta_i.im) < Real::pow10(-30, prec));
    Complex eta_2i = dedekind_eta(tau_from("0", "2", prec), eps, 10000);
    CHECK(eta_2i.re.sign() > 0);
    CHECK(eta_2i.re < eta_i.re);
}

TEST_CASE("eta(i) self-consistent value") {
    // evaluated at 60-digit working precision with two truncation depths,
    // then frozen to the digits below
    mpfr_prec_t prec60 = prec_for_digits(60);
    Complex deep = dedekind_eta(tau_from("0", "1", prec60),
                                Real::pow10(-62, prec60), 10000);
    Complex deeper = dedekind_eta(tau_from("0", "1", prec60),
                                  Real::pow10(-70, prec60), 10000);
    CHECK(abs(deep - deeper) < Real::pow10(-58, prec60));
    Real frozen("0.768225422326056659002594", prec60);
    CHECK(abs(deep.re - frozen) < Real::pow10(-24, prec60));
}

TEST_CASE("eta transformation residuals") {
    mpfr_prec_t prec = prec_for_digits(30);
    Real eps = eps30(prec);
    Real tol = Real::pow10(-26, prec);
    // tau = i is the fixed point: residual at rounding level
    CHECK(eta_transform_residual(tau_from("0", "1", prec), eps, 10000) <
          Real::pow10(-30, prec));
    for (auto [re, im] : std::initializer_list<std::pair<const char*, const char*>>{
             {"0", "2"}, {"0", "1/2"}, {"1/2", "1"}, {"-1/3", "2"}})
        CHECK(eta_transform_residual(tau_from(re, im, prec), eps, 10000) < tol);
}

TEST_CASE("eta logarithmic form") {
    mpfr_prec_t prec = prec_for_digits(30);
    Real eps = eps30(prec);
    Real tol = Real::pow10(-26, prec);
    for (auto [re, im] : std::initializer_list<std::pair<const char*, const char*>>{
             {"0", "1"}, {"0", "2"}, {"0", "3/2"}})
        CHECK(eta_log_form_residual(tau_from(re, im, prec), eps, 100000) < tol);
}

TEST_CASE("two-route consistency at tau = 3i/2") {
    // log of the transformation law against the half-log term it must equal
    mpfr_prec_t prec = prec_for_digits(30);
    Real eps = eps30(prec);
    Tau tau = tau_from("0", "3/2", prec);
    Complex eta_t = dedekind_eta(tau, eps, 10000);
    Complex eta_s = dedekind_eta(tau.inverted_negated(), eps, 10000);
    Complex ratio_log = log(eta_s) - log(eta_t);
    Complex tau_over_i(tau.value().im, -tau.value().re);
    Complex half_log = log(tau_over_i) / Complex(Real(2, prec), Real(0L, prec));
    CHECK(abs(ratio_log - half_log) < Real::pow10(-26, prec));
}

TEST_CASE("eisenstein lattice sums at tau = i") {
    mpfr_prec_t prec = prec_for_digits(30);
    Tau tau_i = tau_from("0", "1", prec);
    // weights 2 mod 4 cancel exactly shell by shell
    for (unsigned k : {6u, 10u})
        for (unsigned R : {10u, 30u})
            CHECK(abs(eisenstein_truncated(k, tau_i, R, 30)).is_zero());
    // weight 4: converges to (2 omega)^4 E_1 / 4!
    Complex e4 = eisenstein_truncated(4, tau_i, 200, 30);
    Real omega = lemniscate_constant(30);
    Real closed = pow_si(2 * omega, 4) * Real(Rational(1, 10), prec) /
                  Real(24, prec);
    CHECK(abs(e4.re - closed) < Real::pow10(-4, prec));
    CHECK(abs(e4.im) < Real::pow10(-28, prec));
    // weight 8 is real as well
    Complex e8 = eisenstein_truncated(8, tau_i, 30, 30);
    CHECK(e8.re.sign() > 0);
    CHECK(abs(e8.im) < Real::pow10(-28, prec));
    CHECK_THROWS_AS(eisenstein_truncated(2, tau_i, 10, 30), PreconditionError);
    CHECK_THROWS_AS(eisenstein_truncated(5, tau_i, 10, 30), PreconditionError);
}

TEST_CASE("eisenstein sums are deterministic") {
    mpfr_prec_t prec = prec_for_digits(30);
    Tau tau_i = tau_from("0", "1", prec);
    Complex a = eisenstein_truncated(4, tau_i, 40, 30);
    Complex b = eisenstein_truncated(4, tau_i, 40, 30);
    CHECK(a == b);
    auto l1 = lambert_sum(3, Real(1, prec), eps30(prec), 100000);
    auto l2 = lambert_sum(3, Real(1, prec), eps30(prec), 100000);
    CHECK(l1.value == l2.value);
    CHECK(l1.terms == l2.terms);
}

TEST_CASE("hurwitz lemniscatic table") {
    auto e = hurwitz_lemniscatic(10);
    CHECK(e[0] == Rational(1, 10));
    CHECK(e[1] == Rational(3, 10));
    CHECK(e[2] == Rational(567, 130));
    auto oracle = oracles::hurwitz_recurrence(10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(e[i] == oracle[i]);
    // positive and super-geometric growth: ratios increase
    Rational prev_ratio;
    for (std::size_t i = 0; i + 1 < 10; ++i) {
        CHECK(e[i].sign() > 0);
        Rational ratio = e[i + 1] / e[i];
        if (i > 0) CHECK(prev_ratio < ratio);
        prev_ratio = ratio;
    }
}

TEST_CASE("lemniscate constant: two algorithms and the sanity bracket") {
    Real omega = lemniscate_constant(30);
    Real oracle = lemniscate_binomial_series(30);
    mpfr_prec_t prec = omega.prec();
    CHECK(abs(omega - oracle) < Real::pow10(-20, prec));
    Real frozen("2.62205755429211981046", prec);
    CHECK(abs(omega - frozen) < Real::pow10(-20, prec));
    Real pi = Real::pi(prec);
    CHECK(omega > Real("0.8", prec) * pi);
    CHECK(omega < pi);
}

TEST_CASE("lemniscate constant brackets the literal series partial sums") {
    mpfr_prec_t prec = prec_for_digits(30);
    auto [partial, tail_bound] = oracles::lemniscate_series_bracket(20000, prec);
    Real omega = lemniscate_constant(30);
    CHECK(partial < omega);
    CHECK(omega < partial + tail_bound);
}

TEST_CASE("lemniscatic lattice check") {
    auto r2 = lemniscatic_lattice_check(2, 50, 30);
    CHECK(r2.residual < Real::pow10(-8, r2.lattice.prec()));
    // closed side recomputed structurally
    mpfr_prec_t prec = prec_for_digits(30);
    Real omega = lemniscate_constant(30);
    Real expected = pow_si(2 * omega, 8) * Real(Rational(3, 10), prec) /
                    Real(Rational::factorial(8), prec);
    CHECK(abs(r2.closed - expected) < Real::pow10(-25, prec));
    // residual decreases with the cutoff at weight 4
    auto a = lemniscatic_lattice_check(1, 50, 30);
    auto b = lemniscatic_lattice_check(1, 100, 30);
    auto c = lemniscatic_lattice_check(1, 300, 30);
    CHECK(b.residual < a.residual);
    CHECK(c.residual < b.residual);
}

TEST_CASE("dedekind eta refuses |q| too close to 1") {
    mpfr_prec_t prec = prec_for_digits(30);
    // Im tau = 1/1000 gives |q| = e^{-2 pi/1000} ~ 0.9937; forty factors
    // cannot reach 1e-34
    CHECK_THROWS_AS(dedekind_eta(tau_from("0", "1/1000", prec),
                                 Real::pow10(-34, prec), 40),
                    NonConvergence);
}
