#include "summa/bernoulli.hpp"

#include "summa/errors.hpp"
#include "summa/operators.hpp"

#include <mutex>

namespace summa {

namespace {

// Quotient of 1 by sum_j d_j z^j with d_0 = 1, by long division.
std::vector<Rational> invert_series(const std::vector<Rational>& d) {
    std::vector<Rational> q(d.size());
    q[0] = Rational(1);
    for (std::size_t n = 1; n < d.size(); ++n) {
        Rational acc;
        for (std::size_t j = 1; j <= n; ++j) acc += d[j] * q[n - j];
        q[n] = -acc;
    }
    return q;
}

// Generating-series denominator: (1 - e^{-z})/z when alternating (PlusHalf
// quotient), (e^z - 1)/z otherwise (MinusHalf quotient).
std::vector<Rational> generating_denominator(std::size_t n_max, bool alternating) {
    std::vector<Rational> d(n_max + 1);
    for (std::size_t j = 0; j <= n_max; ++j) {
        d[j] = Rational(1) / Rational::factorial(static_cast<unsigned long>(j + 1));
        if (alternating && (j % 2 == 1)) d[j] = -d[j];
    }
    return d;
}

std::vector<Rational> bernoulli_series_inversion(std::size_t n_max,
                                                 Convention convention) {
    auto q = invert_series(
        generating_denominator(n_max, convention == Convention::PlusHalf));
    std::vector<Rational> b(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        b[n] = q[n] * Rational::factorial(static_cast<unsigned long>(n));
    return b;
}

std::vector<Rational> bernoulli_faulhaber_extraction(std::size_t n_max,
                                                     Convention convention) {
    // b_r (PlusHalf) is the coefficient of x in the discrete primitive of
    // x^r: the derivative of S_r is the Bernoulli polynomial, whose constant
    // term is b_r.
    std::vector<Rational> b(n_max + 1);
    for (std::size_t r = 0; r <= n_max; ++r)
        b[r] = discrete_sum(Polynomial::monomial(r)).coeff(1);
    if (convention == Convention::MinusHalf && n_max >= 1) b[1] = -b[1];
    return b;
}

std::vector<Rational> bernoulli_quadratic_recurrence(std::size_t n_max,
                                                     Convention convention) {
    std::vector<Rational> b(n_max + 1);
    b[0] = Rational(1);
    if (n_max >= 1)
        b[1] = (convention == Convention::PlusHalf) ? Rational(1, 2)
                                                    : Rational(-1, 2);
    if (n_max >= 2) b[2] = Rational(1, 6); // seed, the only shared constant
    for (std::size_t n = 2; 2 * n <= n_max; ++n) {
        Rational acc;
        for (std::size_t p = 1; p <= n - 1; ++p)
            acc += Rational::binomial(2 * n, 2 * p) * b[2 * p] * b[2 * n - 2 * p];
        b[2 * n] = -acc / Rational(static_cast<long>(2 * n + 1));
    }
    return b;
}

std::mutex g_bern_mutex;
std::vector<Rational> g_bern_plus; // PlusHalf values, FaulhaberExtraction

Rational bernoulli_plus_half(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    if (g_bern_plus.size() <= n) {
        std::size_t upto = n < 32 ? 32 : n;
        g_bern_plus = bernoulli_faulhaber_extraction(upto, Convention::PlusHalf);
    }
    return g_bern_plus[n];
}

} // namespace

BernoulliTable bernoulli_numbers(std::size_t n_max, Convention convention,
                                 BernoulliAlgorithm algorithm) {
    BernoulliTable t;
    t.convention = convention;
    switch (algorithm) {
    case BernoulliAlgorithm::FaulhaberExtraction:
        t.values = bernoulli_faulhaber_extraction(n_max, convention);
        break;
    case BernoulliAlgorithm::SeriesInversion:
        t.values = bernoulli_series_inversion(n_max, convention);
        break;
    case BernoulliAlgorithm::QuadraticRecurrence:
        t.values = bernoulli_quadratic_recurrence(n_max, convention);
        break;
    }
    return t;
}

Rational bernoulli_number(std::size_t n, Convention convention) {
    Rational b = bernoulli_plus_half(n);
    if (n == 1 && convention == Convention::MinusHalf) return -b;
    return b;
}

Polynomial faulhaber(std::size_t r) {
    if (r == 0) return Polynomial::monomial(1);
    // S_r(x) = x^{r+1}/(r+1) + x^r/2
    //        + sum_{1 <= p < (r+1)/2} C(r, 2p-1) b_2p/(2p) x^{r-2p+1}
    Polynomial s = Polynomial::monomial(
        r + 1, Rational(1) / Rational(static_cast<long>(r + 1)));
    s = s + Polynomial::monomial(r, Rational(1, 2));
    for (std::size_t p = 1; 2 * p < r + 1; ++p) {
        Rational c = Rational::binomial(r, 2 * p - 1) * bernoulli_plus_half(2 * p) /
                     Rational(static_cast<long>(2 * p));
        s = s + Polynomial::monomial(r - 2 * p + 1, c);
    }
    return s;
}

Polynomial bernoulli_polynomial(std::size_t r) {
    Polynomial b;
    for (std::size_t p = 0; p <= r; ++p)
        b = b + Polynomial::monomial(
                    r - p, Rational::binomial(r, p) * bernoulli_plus_half(p));
    return b;
}

EMCoefficients em_coefficients(std::size_t n_max) {
    // beta_n are the quotient coefficients of 1 / ((1 - e^{-z})/z).
    return EMCoefficients{invert_series(generating_denominator(n_max, true))};
}

Polynomial euler_maclaurin_poly(const Polynomial& f) {
    if (f.is_zero()) return Polynomial();
    std::size_t d = *f.degree();
    EMCoefficients em = em_coefficients(d);
    Polynomial acc;
    Polynomial dk = f; // D^k f
    for (std::size_t k = 0; k <= d; ++k) {
        acc = acc + em.betas[k] * dk;
        dk = dk.derivative();
    }
    return acc.antiderivative();
}

Polynomial kappa_shift(const Polynomial& f, std::size_t order) {
    // nu D = sum_{j>=0} (-1)^j D^{j+1} / (j+1)!, truncated at derivative
    // order `order`.
    Polynomial nu_d;
    Polynomial dk = f.derivative();
    for (std::size_t m = 1; m <= order && !dk.is_zero(); ++m) {
        Rational c = Rational(1) / Rational::factorial(static_cast<unsigned long>(m));
        if (m % 2 == 0) c = -c;
        nu_d = nu_d + c * dk;
        dk = dk.derivative();
    }
    return f - nu_d;
}

std::pair<Rational, Rational> quadratic_identity(std::size_t n) {
    if (n < 2)
        throw PreconditionError(
            "quadratic_identity: requires n >= 2 (empty sum at n = 1)");
    Rational lhs = Rational(static_cast<long>(2 * n + 1)) * bernoulli_plus_half(2 * n);
    Rational acc;
    for (std::size_t p = 1; p <= n - 1; ++p)
        acc += Rational::binomial(2 * n, 2 * p) * bernoulli_plus_half(2 * p) *
               bernoulli_plus_half(2 * n - 2 * p);
    return {lhs, -acc};
}

Real ReciprocalShifted::value(const Real& x) const {
    return Real(1, x.prec()) / (Real(1, x.prec()) + x);
}

Real ReciprocalShifted::integral(const Real& a, const Real& b) const {
    Real one(1, a.prec() > b.prec() ? a.prec() : b.prec());
    return log(one + b) - log(one + a);
}

Real ReciprocalShifted::derivative(std::size_t order, const Real& x) const {
    // f^(k)(x) = (-1)^k k! (1+x)^{-k-1}
    Real base = Real(1, x.prec()) + x;
    Real r = Real(Rational::factorial(static_cast<unsigned long>(order)), x.prec()) *
             pow_si(base, -static_cast<long>(order) - 1);
    return (order % 2 == 1) ? -r : r;
}

Real PolynomialFunction::value(const Real& x) const {
    Real r(0L, x.prec());
    const auto& c = p_.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + Real(c[i], x.prec());
    return r;
}

Real PolynomialFunction::integral(const Real& a, const Real& b) const {
    Polynomial anti = p_.antiderivative();
    PolynomialFunction f(anti);
    return f.value(b) - f.value(a);
}

Real PolynomialFunction::derivative(std::size_t order, const Real& x) const {
    Polynomial d = p_;
    for (std::size_t i = 0; i < order && !d.is_zero(); ++i) d = d.derivative();
    return PolynomialFunction(d).value(x);
}

EulerMaclaurinResult euler_maclaurin_numeric(const SmoothFunction& f,
                                             unsigned long n,
                                             std::size_t corrections,
                                             mpfr_prec_t prec) {
    if (2 * corrections + 1 > f.max_derivative_order())
        throw PreconditionError("euler_maclaurin_numeric: corrections beyond "
                                "the available derivatives");
    Real zero(0L, prec);
    Real x_n(static_cast<long>(n), prec);
    Real value = f.integral(zero, x_n) + (f.value(x_n) - f.value(zero)) / 2;
    for (std::size_t p = 1; p <= corrections; ++p) {
        Rational w = bernoulli_plus_half(2 * p) /
                     Rational::factorial(static_cast<unsigned long>(2 * p));
        value += Real(w, prec) *
                 (f.derivative(2 * p - 1, x_n) - f.derivative(2 * p - 1, zero));
    }
    std::size_t p1 = corrections + 1;
    Rational w1 = bernoulli_plus_half(2 * p1) /
                  Rational::factorial(static_cast<unsigned long>(2 * p1));
    Real omitted = Real(w1, prec) *
                   (f.derivative(2 * p1 - 1, x_n) - f.derivative(2 * p1 - 1, zero));
    return EulerMaclaurinResult{value, corrections, abs(omitted)};
}

} // namespace summa
