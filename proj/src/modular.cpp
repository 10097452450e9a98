#include "summa/modular.hpp"

#include "summa/bernoulli.hpp"
#include "summa/errors.hpp"

namespace summa {

namespace {

Real make_inf(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_inf(r.raw(), 1);
    return r;
}

} // namespace

Tau::Tau(Complex value) : v_(std::move(value)) {
    if (!(v_.im.sign() > 0))
        throw PreconditionError("tau: imaginary part must be positive");
}

Tau Tau::purely_imaginary(const Real& im) {
    return Tau(Complex(Real(0L, im.prec()), im));
}

Tau Tau::inverted_negated() const {
    Complex one(Real(1, v_.prec()), Real(0L, v_.prec()));
    return Tau(-(one / v_));
}

SeriesResult<Real> lambert_sum(unsigned p, const Real& a, const Real& eps,
                               long max_terms) {
    if (!(a.sign() > 0)) throw DomainError("lambert_sum: requires a > 0");
    mpfr_prec_t prec = a.prec() > eps.prec() ? a.prec() : eps.prec();
    Real two_pi_a = 2 * (Real::pi(prec) * a);
    Real x = exp(-two_pi_a); // decay ratio, < 1
    Real one(1, prec);
    Real two(2, prec);
    auto term = [&](long n) {
        return pow_si(Real(n, prec), static_cast<long>(p)) /
               expm1(Real(n, prec) * two_pi_a);
    };
    // For n >= N+1 with e^{2 pi a (N+1)} >= 2 we may use e^y - 1 >= e^y/2:
    //   tail <= 2 sum_{n>N} n^p x^n
    //        <= 2 (N+1)^p x^{N+1} sum_{j>=0} e^{pj/(N+1)} x^j
    // using (1 + j/(N+1))^p <= e^{pj/(N+1)}; the geometric factor needs
    // x e^{p/(N+1)} < 1. Until both conditions hold, report +inf.
    auto tail = [&](long n) {
        Real growth = exp(Real(static_cast<long>(p), prec) / Real(n + 1, prec));
        Real ratio = x * growth;
        if (!(ratio < one)) return make_inf(prec);
        if (exp(Real(n + 1, prec) * two_pi_a) < two) return make_inf(prec);
        Real head = pow_si(Real(n + 1, prec), static_cast<long>(p)) *
                    pow_si(x, n + 1);
        return two * head / (one - ratio);
    };
    return sum_series<Real>(term, tail, eps, max_terms, Real(0L, prec));
}

Real schlomilch_residual(const Real& a, const Real& eps, long max_terms) {
    if (!(a.sign() > 0)) throw DomainError("schlomilch_residual: requires a > 0");
    mpfr_prec_t prec = a.prec() > eps.prec() ? a.prec() : eps.prec();
    Real pi = Real::pi(prec);
    Real inv = Real(1, prec) / a;
    // Split the series tolerance so the combined error stays within eps.
    Real sub_eps = eps / (8 * (pi * (a + inv)));
    Real s_a = lambert_sum(1, a, sub_eps, max_terms).value;
    Real s_inv = lambert_sum(1, inv, sub_eps, max_terms).value;
    Real rhs = 2 * (pi * (inv * s_inv + a * s_a));
    Real lhs = pi * (inv + a) / 12 - Real(Rational(1, 2), prec);
    return abs(lhs - rhs);
}

RamanujanCheck ramanujan_check(unsigned l, int digits, long max_terms) {
    if (l < 3 || l % 2 == 0)
        throw PreconditionError("ramanujan_check: requires odd l >= 3 (the "
                                "weight-2l lattice sum vanishes at tau = i "
                                "only for odd l >= 2)");
    mpfr_prec_t prec = prec_for_digits(digits);
    Real eps = Real::pow10(-(digits + 4), prec);
    auto series = lambert_sum(2 * l - 1, Real(1, prec), eps, max_terms);
    Rational closed = bernoulli_number(2 * l, Convention::MinusHalf) /
                      Rational(static_cast<long>(4 * l));
    Real closed_r(closed, prec);
    return RamanujanCheck{series.value, closed, abs(series.value - closed_r)};
}

Complex dedekind_eta(const Tau& tau, const Real& eps, long max_factors) {
    mpfr_prec_t prec = tau.value().prec() > eps.prec() ? tau.value().prec()
                                                       : eps.prec();
    Real pi = Real::pi(prec);
    Complex two_pi_i_tau = Complex(Real(0L, prec), 2 * pi) * tau.value();
    Complex q = exp(two_pi_i_tau);
    Real aq = abs(q);
    Real one(1, prec);
    // |log prod_{n>N} (1 - q^n)| <= 2 |q|^{N+1} / (1 - |q|).
    Complex qn = q;
    Complex product(Real(1, prec), Real(0L, prec));
    long n = 0;
    while (true) {
        ++n;
        product = product * (Complex(one, Real(0L, prec)) - qn);
        Real bound = 2 * (pow_si(aq, n + 1) / (one - aq));
        if (bound <= eps) break;
        if (n >= max_factors)
            throw NonConvergence("dedekind_eta: |q| too close to 1 for the "
                                 "configured factor budget",
                                 product.str(20), bound.str(20), n);
        qn = qn * q;
    }
    Complex prefactor = exp(two_pi_i_tau / Complex(Real(24, prec), Real(0L, prec)));
    return prefactor * product;
}

Real eta_transform_residual(const Tau& tau, const Real& eps, long max_factors) {
    Complex eta_s = dedekind_eta(tau.inverted_negated(), eps, max_factors);
    Complex eta_t = dedekind_eta(tau, eps, max_factors);
    // tau/i has positive real part whenever Im tau > 0, so the principal
    // square root never crosses the branch cut.
    Complex tau_over_i(tau.value().im, -tau.value().re);
    Complex rhs = sqrt(tau_over_i) * eta_t;
    return abs(eta_s - rhs);
}

Real eta_log_form_residual(const Tau& tau, const Real& eps, long max_terms) {
    mpfr_prec_t prec = tau.value().prec() > eps.prec() ? tau.value().prec()
                                                       : eps.prec();
    Real pi = Real::pi(prec);
    Real one(1, prec);
    Complex i_unit(Real(0L, prec), Real(1, prec));
    Complex tau_v = tau.value();
    Complex inv_tau = Complex(one, Real(0L, prec)) / tau_v;

    Complex q = exp(Complex(Real(0L, prec), 2 * pi) * tau_v);
    Complex qs = exp(Complex(Real(0L, prec), -2 * pi) * inv_tau);
    Real rho = abs(q) > abs(qs) ? abs(q) : abs(qs);

    Complex tau_over_i(tau_v.im, -tau_v.re);
    Complex lhs = log(tau_over_i) / Complex(Real(2, prec), Real(0L, prec)) +
                  (pi * i_unit) * (tau_v + inv_tau) /
                      Complex(Real(12, prec), Real(0L, prec));

    // Running powers of q and q' keep the term evaluation O(1).
    Complex qm(Real(1, prec), Real(0L, prec));
    Complex qsm(Real(1, prec), Real(0L, prec));
    auto term = [&](long m) {
        qm = qm * q;
        qsm = qsm * qs;
        Complex one_c(one, Real(0L, prec));
        Complex t = qm / (one_c - qm) - qsm / (one_c - qsm);
        return t / Complex(Real(m, prec), Real(0L, prec));
    };
    // |q^m/(1-q^m)| <= rho^m/(1-rho); tail over m > M:
    //   sum_{m>M} (1/m) 2 rho^m/(1-rho) <= 2 rho^{M+1} / ((M+1)(1-rho)^2).
    auto tail = [&](long m) {
        return 2 * (pow_si(rho, m + 1) /
                    (Real(m + 1, prec) * ((one - rho) * (one - rho))));
    };
    auto rhs = sum_series<Complex>(term, tail, eps, max_terms,
                                   Complex(Real(0L, prec), Real(0L, prec)));
    return abs(lhs - rhs.value);
}

Complex eisenstein_truncated(unsigned k, const Tau& tau, unsigned R, int digits) {
    if (k < 4 || k % 2 != 0)
        throw PreconditionError("eisenstein_truncated: requires even k >= 4 "
                                "(k = 2 is only conditionally convergent)");
    if (R < 1) throw PreconditionError("eisenstein_truncated: requires R >= 1");
    mpfr_prec_t prec = prec_for_digits(digits);
    const Complex t(at_prec(tau.value().re, prec), at_prec(tau.value().im, prec));
    Complex acc(Real(0L, prec), Real(0L, prec));
    long kk = static_cast<long>(k);
    auto point_term = [&](long m, long n) {
        Complex w = Complex(Real(m, prec), Real(0L, prec)) +
                    Complex(Real(n, prec), Real(0L, prec)) * t;
        return pow_si(w, -kk);
    };
    for (long s = 1; s <= static_cast<long>(R); ++s) {
        // Orbit representatives of the i-rotation on the shell max(|m|,|n|)=s:
        // m in [1, s], n in [0, s] with max = s. Each orbit is summed into
        // its own zero-initialized accumulator: at tau = i the four terms of
        // an orbit are exact sign copies of each other, so for k = 2 mod 4
        // the orbit total is exactly +-0 even in floating point.
        auto add_orbit = [&](long m, long n) {
            Complex orbit = point_term(m, n);
            orbit += point_term(-n, m);
            orbit += point_term(-m, -n);
            orbit += point_term(n, -m);
            acc += orbit;
        };
        for (long n = 0; n < s; ++n) add_orbit(s, n);   // right edge
        for (long m = 1; m <= s; ++m) add_orbit(m, s);  // top edge
    }
    return acc;
}

std::vector<Rational> hurwitz_lemniscatic(std::size_t n_max) {
    if (n_max < 1) throw PreconditionError("hurwitz_lemniscatic: requires N >= 1");
    std::vector<Rational> e(n_max + 1);
    e[1] = Rational(1, 10);
    for (std::size_t n = 2; n <= n_max; ++n) {
        Rational acc;
        for (std::size_t j = 1; j <= n - 1; ++j)
            acc += Rational(static_cast<long>(4 * j - 1)) *
                   Rational(static_cast<long>(4 * (n - j) - 1)) *
                   Rational::binomial(4 * n, 4 * j) * e[j] * e[n - j];
        Rational scale = Rational(3) /
                         (Rational(static_cast<long>(2 * n - 3)) *
                          Rational(static_cast<long>(16 * n * n - 1)));
        e[n] = scale * acc;
    }
    e.erase(e.begin()); // 1-indexed in math, 0-indexed vector of E_1..E_N
    return e;
}

Real lemniscate_constant(int digits) {
    // pi / agm(1, sqrt 2); the AGM converges quadratically, ~log2(prec)
    // iterations. Used as an implementation device only; the binomial-series
    // route below is the validated oracle.
    mpfr_prec_t prec = prec_for_digits(digits) + 32;
    Real a(1, prec);
    Real b = sqrt(Real(2, prec));
    Real cutoff = Real::pow2(-(static_cast<long>(prec) - 4), prec);
    for (int i = 0; i < 200; ++i) {
        if (abs(a - b) <= cutoff * abs(a)) break;
        Real am = (a + b) / 2;
        Real gm = sqrt(a * b);
        a = am;
        b = gm;
    }
    // Round down to the caller's working precision.
    return at_prec(Real::pi(prec) / a, prec_for_digits(digits));
}

Real lemniscate_binomial_series(int digits) {
    mpfr_prec_t prec = prec_for_digits(digits) + 32;
    Real one(1, prec);
    Real x0 = sqrt(sqrt(Real(2, prec)) - one);
    Real x4 = pow_si(x0, 4);
    Real eps = Real::pow10(-(digits + 6), prec);

    Real acc(0L, prec);
    Rational c(1); // C(2k,k)/4^k, via the ratio (2k+1)/(2k+2)
    Real xpow = x0; // x0^{4k+1}
    long k = 0;
    while (true) {
        acc += Real(c, prec) * xpow / (4 * k + 1);
        // Elementary tail bound: the binomial factors are <= 1, so
        // sum_{j>k} x0^{4j+1} <= x0^{4k+5}/(1 - x0^4).
        Real bound = xpow * x4 / (one - x4);
        if (bound <= eps) break;
        c = c * Rational(2 * k + 1) / Rational(2 * k + 2);
        xpow *= x4;
        ++k;
        if (k > 100000)
            throw NonConvergence("lemniscate_binomial_series: budget exceeded",
                                 acc.str(20), bound.str(20), k);
    }
    return at_prec(4 * acc, prec_for_digits(digits));
}

LatticeCheck lemniscatic_lattice_check(unsigned n, unsigned R, int digits) {
    if (n < 1) throw PreconditionError("lemniscatic_lattice_check: requires n >= 1");
    mpfr_prec_t prec = prec_for_digits(digits);
    Tau tau_i = Tau::purely_imaginary(Real(1, prec));
    Complex lattice = eisenstein_truncated(4 * n, tau_i, R, digits);
    Real omega = lemniscate_constant(digits);
    Rational e_n = hurwitz_lemniscatic(n)[n - 1];
    Real closed = pow_si(2 * omega, 4L * n) * Real(e_n, prec) /
                  Real(Rational::factorial(4UL * n), prec);
    return LatticeCheck{lattice.re, closed, abs(lattice.re - closed)};
}

} // namespace summa
