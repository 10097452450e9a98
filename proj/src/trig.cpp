#include "summa/trig.hpp"

#include "summa/bernoulli.hpp"
#include "summa/errors.hpp"

namespace summa {

namespace {

Real singular_guard(mpfr_prec_t prec) {
    return Real::pow2(-static_cast<long>(prec) / 2, prec);
}

} // namespace

IdentityReport sine_product_identity(unsigned n, int digits) {
    if (n < 2) throw PreconditionError("sine_product_identity: requires n >= 2");
    mpfr_prec_t prec = prec_for_digits(digits);
    Real pi = Real::pi(prec);
    Real lhs(1, prec);
    for (unsigned p = 1; p < n; ++p)
        lhs *= sin(Real(static_cast<long>(p), prec) * pi / static_cast<long>(n));
    Real rhs = static_cast<long>(n) * Real::pow2(1 - static_cast<long>(n), prec);
    return IdentityReport{lhs, rhs, abs(lhs - rhs)};
}

IdentityReport cot_finite_identity(const Real& z, unsigned m) {
    mpfr_prec_t prec = z.prec();
    long n = 2L * m + 1;
    Real guard = singular_guard(prec);
    Real pi = Real::pi(prec);

    if (abs(sin(z)) < guard)
        throw SingularInput("cot_finite_identity: z at a pole of cot");
    Real zn = z / n;
    if (abs(cos(zn)) < guard)
        throw SingularInput("cot_finite_identity: tan(z/n) at a pole");
    Real t = tan(zn);
    if (abs(t) < guard)
        throw SingularInput("cot_finite_identity: z/n at a zero of tan");

    Real lhs = cot(z);
    Real nt = static_cast<long>(n) * t;
    Real nt2 = nt * nt;
    Real rhs = Real(1, prec) / nt;
    for (unsigned p = 1; p <= m; ++p) {
        Real angle = Real(static_cast<long>(p), prec) * pi / n;
        Real c = cos(angle);
        Real ns = static_cast<long>(n) * sin(angle);
        Real denom = c * c * nt2 - ns * ns;
        if (abs(denom) < guard)
            throw SingularInput("cot_finite_identity: singular summand");
        rhs += (2 * (static_cast<long>(n) * t)) / denom;
    }
    return IdentityReport{lhs, rhs, abs(lhs - rhs)};
}

SeriesResult<Real> cot_partial_fraction(const Real& z, const Real& eps,
                                        long max_terms) {
    mpfr_prec_t prec = z.prec();
    Real pi = Real::pi(prec);
    if (z.is_zero() || abs(sin(z)) < singular_guard(prec))
        throw SingularInput("cot_partial_fraction: z at a multiple of pi");
    Real z2 = z * z;
    Real az = abs(z);
    auto term = [&](long p) {
        return (2 * z) / (z2 - Real(p, prec) * Real(p, prec) * pi * pi);
    };
    // tail_{p>P} |2z|/(p^2 pi^2 - z^2) <= 2|z| * int_P^inf dt/(pi^2 t^2 - z^2)
    //          = (1/pi) log((pi P + |z|)/(pi P - |z|)), valid once pi P > |z|.
    // Below that cutoff report +inf ("bound not valid yet").
    auto tail = [&](long p) {
        Real pp = pi * Real(p, prec);
        if (pp <= az) {
            Real inf(prec);
            mpfr_set_inf(inf.raw(), 1);
            return inf;
        }
        return log((pp + az) / (pp - az)) / pi;
    };
    return sum_series<Real>(term, tail, eps, max_terms, Real(1, prec) / z);
}

IdentityReport sin_finite_identity(const Real& z, unsigned m) {
    mpfr_prec_t prec = z.prec();
    long n = 2L * m + 1;
    Real pi = Real::pi(prec);
    Real lhs = sin(z);
    Real szn = sin(z / n);
    Real szn2 = szn * szn;
    Real rhs = static_cast<long>(n) * szn;
    for (unsigned k = 1; k <= m; ++k) {
        Real sk = sin(Real(static_cast<long>(k), prec) * pi / n);
        rhs *= Real(1, prec) - szn2 / (sk * sk);
    }
    return IdentityReport{lhs, rhs, abs(lhs - rhs)};
}

Real sin_product(const Real& z, unsigned long terms, int digits) {
    mpfr_prec_t prec = prec_for_digits(digits) > z.prec() ? prec_for_digits(digits)
                                                          : z.prec();
    Real pi = Real::pi(prec);
    Real z2 = z * z;
    Real acc = z;
    for (unsigned long p = 1; p <= terms; ++p) {
        Real pp = Real(static_cast<long>(p), prec) * pi;
        acc *= Real(1, prec) - z2 / (pp * pp);
    }
    return acc;
}

ZetaEven zeta_even(unsigned n, int digits) {
    if (n < 1) throw PreconditionError("zeta_even: requires n >= 1");
    mpfr_prec_t prec = prec_for_digits(digits);
    Rational b = bernoulli_number(2 * n, Convention::PlusHalf);
    Rational coeff = Rational(2).pow(2 * n - 1) * b /
                     Rational::factorial(2 * n);
    if (n % 2 == 0) coeff = -coeff;
    Real value = Real(coeff, prec) * pow_si(Real::pi(prec), 2L * n);
    return ZetaEven{coeff, value};
}

} // namespace summa
