#include "summa/legendre.hpp"

#include "summa/bernoulli.hpp"
#include "summa/complexnum.hpp"
#include "summa/errors.hpp"
#include "summa/trig.hpp"

namespace summa {

namespace {

// Initial and maximal direct-term cutoffs before the Euler-Maclaurin tail
// takes over, and the number of Bernoulli corrections applied to it. The
// cutoff doubles until the tail bound meets the requested eps.
constexpr long kSeriesInitialTerms = 2000;
constexpr long kSeriesMaxTerms = 512000;
constexpr std::size_t kSeriesCorrections = 4;

} // namespace

Real legendre_closed_form(const Real& a, bool allow_limit) {
    mpfr_prec_t prec = a.prec();
    if (a.is_zero()) {
        if (allow_limit) return Real(0L, prec);
        throw DomainError("legendre_closed_form: a = 0 (the closed form is "
                          "indeterminate; the integral's limit value is 0)");
    }
    Real threshold = Real(Rational(1, 1000), prec);
    if (abs(a) < threshold) {
        // sum_{n>=1} b_2n a^{2n-1} / (2 (2n)!); term ratio ~ (a/2pi)^2, so a
        // handful of terms reaches full precision at |a| < 1e-3.
        Real acc(0L, prec);
        Real a2 = a * a;
        Real apow = a;
        for (unsigned n = 1; n <= 24; ++n) {
            Rational w = bernoulli_number(2 * n, Convention::PlusHalf) /
                         (Rational(2) * Rational::factorial(2UL * n));
            acc += Real(w, prec) * apow;
            apow *= a2;
        }
        return acc;
    }
    Real em1 = expm1(a);
    return (em1 + Real(2, prec)) / (4 * em1) - Real(1, prec) / (2 * a);
}

SeriesResult<Real> legendre_series(const Real& a, const Real& eps) {
    if (a.is_zero()) throw DomainError("legendre_series: requires a != 0");
    mpfr_prec_t prec = a.prec() > eps.prec() ? a.prec() : eps.prec();
    Real pi = Real::pi(prec);
    Real a2 = a * a;
    Real four_pi2 = 4 * (pi * pi);

    // Tail over n > N via Euler-Maclaurin: with f(t) = a/(a^2 + 4 pi^2 t^2),
    //   sum_{n>N} f(n) = int_N^inf f - f(N)/2 - sum_p b_2p/(2p)! f^(2p-1)(N).
    // f(t) = (1/(2pi)) Im 1/(t - c) with c = i a/(2 pi), so the derivatives
    // are exact: f^(k)(t) = (1/(2pi)) Im (-1)^k k! (t - c)^{-k-1}.
    // The remainder after p corrections is bounded by the first omitted
    // correction (the high derivatives are sign-constant and monotone on
    // [N, inf)); the reported bound carries a factor 2 on top.
    Complex c(Real(0L, prec), a / (2 * pi));
    auto deriv = [&](std::size_t k, const Real& at) {
        Complex base = Complex(at, Real(0L, prec)) - c;
        Complex d = pow_si(base, -static_cast<long>(k) - 1);
        Real r = Real(Rational::factorial(static_cast<unsigned long>(k)), prec) *
                 d.im / (2 * pi);
        return (k % 2 == 1) ? -r : r;
    };
    Rational w1 = bernoulli_number(2 * (kSeriesCorrections + 1), Convention::PlusHalf) /
                  Rational::factorial(2UL * (kSeriesCorrections + 1));

    Real acc(0L, prec);
    long summed = 0;
    for (long cutoff = kSeriesInitialTerms; cutoff <= kSeriesMaxTerms;
         cutoff *= 2) {
        for (long n = summed + 1; n <= cutoff; ++n)
            acc += a / (a2 + four_pi2 * Real(n, prec) * Real(n, prec));
        summed = cutoff;
        Real n_cut(cutoff, prec);
        Real omitted =
            abs(Real(w1, prec) * deriv(2 * kSeriesCorrections + 1, n_cut));
        Real bound = 2 * omitted;
        if (bound <= eps) {
            Real integral = atan(a / (2 * (pi * n_cut))) / (2 * pi);
            Real f_n = a / (a2 + four_pi2 * n_cut * n_cut);
            Real tail = integral - f_n / 2;
            for (std::size_t p = 1; p <= kSeriesCorrections; ++p) {
                Rational w = bernoulli_number(2 * p, Convention::PlusHalf) /
                             Rational::factorial(2UL * p);
                tail -= Real(w, prec) * deriv(2 * p - 1, n_cut);
            }
            return SeriesResult<Real>{acc + tail, bound, cutoff};
        }
    }
    throw NonConvergence("legendre_series: tail bound above eps at the "
                         "maximal cutoff",
                         acc.str(20), eps.str(20), summed);
}

std::pair<Rational, Rational> bernoulli_moment_exact(unsigned n) {
    if (n < 1) throw PreconditionError("bernoulli_moment: requires n >= 1");
    // zeta route: (2pi)^{-2n} (2n-1)! zeta(2n) with zeta(2n) = r_n pi^{2n}
    // collapses to the rational (2n-1)! r_n / 4^n.
    Rational b = bernoulli_number(2 * n, Convention::PlusHalf);
    Rational r_n = Rational(2).pow(2L * n - 1) * b / Rational::factorial(2UL * n);
    if (n % 2 == 0) r_n = -r_n;
    Rational series_route = Rational::factorial(2UL * n - 1) * r_n /
                            Rational(4).pow(static_cast<long>(n));
    Rational closed = b / Rational(static_cast<long>(4 * n));
    if (n % 2 == 0) closed = -closed;
    return {series_route, closed};
}

IntegralReport bernoulli_moment(unsigned n, int digits) {
    mpfr_prec_t prec = prec_for_digits(digits);
    ZetaEven z = zeta_even(n, digits);
    Real two_pi = 2 * Real::pi(prec);
    Real series_value = pow_si(two_pi, -2L * n) *
                        (Real(Rational::factorial(2UL * n - 1), prec) * z.value);
    Real closed_value(bernoulli_moment_exact(n).second, prec);
    return IntegralReport{series_value, closed_value,
                          abs(series_value - closed_value)};
}

namespace {

// sin(ax)/(e^{2 pi x} - 1) with the removable singularity at 0 filled in.
Real legendre_integrand(const Real& a, const Real& x, const Real& two_pi) {
    if (x.is_zero()) return a / two_pi;
    return sin(a * x) / expm1(two_pi * x);
}

struct SimpsonState {
    const Real* a;
    const Real* two_pi;
    long evals = 0;
    long max_evals = 2000000;
};

Real adaptive_simpson(SimpsonState& st, const Real& x0, const Real& x2,
                      const Real& f0, const Real& f1, const Real& f2,
                      const Real& whole, const Real& eps, int depth) {
    Real xm = (x0 + x2) / 2;
    Real xl = (x0 + xm) / 2;
    Real xr = (xm + x2) / 2;
    Real fl = legendre_integrand(*st.a, xl, *st.two_pi);
    Real fr = legendre_integrand(*st.a, xr, *st.two_pi);
    st.evals += 2;
    if (st.evals > st.max_evals)
        throw NonConvergence("legendre_quadrature: evaluation budget exceeded",
                             whole.str(20), eps.str(20), st.evals);
    Real h = x2 - x0;
    Real left = h / 12 * (f0 + 4 * fl + f1);
    Real right = h / 12 * (f1 + 4 * fr + f2);
    Real delta = left + right - whole;
    if (depth <= 0)
        throw NonConvergence("legendre_quadrature: recursion depth exhausted",
                             whole.str(20), abs(delta).str(20), st.evals);
    // The usual 15x Richardson factor is unsafe on the oscillatory large-a
    // cases, so accept on |delta| <= eps directly and force the first few
    // splits unconditionally.
    if (depth <= 44 && abs(delta) <= eps) return left + right + delta / 15;
    Real half_eps = eps / 2;
    return adaptive_simpson(st, x0, xm, f0, fl, f1, left, half_eps, depth - 1) +
           adaptive_simpson(st, xm, x2, f1, fr, f2, right, half_eps, depth - 1);
}

} // namespace

Real legendre_quadrature(const Real& a, const Real& upper, const Real& eps) {
    if (a.is_zero()) throw DomainError("legendre_quadrature: requires a != 0");
    if (!(upper.sign() > 0))
        throw DomainError("legendre_quadrature: requires upper > 0");
    mpfr_prec_t prec = a.prec() > eps.prec() ? a.prec() : eps.prec();
    Real two_pi = 2 * Real::pi(prec);
    SimpsonState st{&a, &two_pi};
    Real x0(0L, prec);
    Real f0 = legendre_integrand(a, x0, two_pi);
    Real f2 = legendre_integrand(a, upper, two_pi);
    Real xm = upper / 2;
    Real f1 = legendre_integrand(a, xm, two_pi);
    Real whole = upper / 6 * (f0 + 4 * f1 + f2);
    return adaptive_simpson(st, x0, upper, f0, f1, f2, whole, eps, 48);
}

} // namespace summa
