// Bernoulli numbers by three independent exact algorithms, power-sum
// (Faulhaber) polynomials, the Euler-Maclaurin operator on polynomials, and
// a numeric Euler-Maclaurin evaluator for smooth functions with analytic
// derivative oracles.
#pragma once

#include "summa/polynomial.hpp"
#include "summa/real.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace summa {

/// Sign convention for b_1: the generating series S/(1 - e^{-S}) gives
/// b_1 = +1/2, while z/(e^z - 1) gives b_1 = -1/2. Even-index values agree.
enum class Convention { MinusHalf, PlusHalf };

enum class BernoulliAlgorithm {
    FaulhaberExtraction, // coefficient of x in the discrete primitive of x^n
    SeriesInversion,     // exact long division of the generating series
    QuadraticRecurrence  // (2n+1) b_2n = -sum C(2n,2p) b_2p b_{2n-2p}, seeded
                         // with b_2 = 1/6
};

struct BernoulliTable {
    Convention convention;
    std::vector<Rational> values; // indexed 0..N
};

BernoulliTable bernoulli_numbers(
    std::size_t n_max, Convention convention = Convention::MinusHalf,
    BernoulliAlgorithm algorithm = BernoulliAlgorithm::FaulhaberExtraction);

/// Convenience: b_n in the requested convention (memoized internally).
Rational bernoulli_number(std::size_t n,
                          Convention convention = Convention::MinusHalf);

/// The power-sum polynomial S_r with S_r(n) = 1^r + ... + n^r, S_r(0) = 0,
/// degree r+1, leading coefficient 1/(r+1).
Polynomial faulhaber(std::size_t r);

/// B_r(x) = sum_p C(r,p) b_p x^{r-p} (b_1 = +1/2 convention), which equals
/// the derivative of faulhaber(r).
Polynomial bernoulli_polynomial(std::size_t r);

struct EMCoefficients {
    std::vector<Rational> betas; // beta_0..beta_N of D/(1 - e^{-D})
};

/// Coefficients of D/(1 - e^{-D}) by exact power-series long division.
EMCoefficients em_coefficients(std::size_t n_max);

/// I(sum_k beta_k D^k f) truncated at k = deg f; equals discrete_sum(f).
Polynomial euler_maclaurin_poly(const Polynomial& f);

/// (1 - nu D)(f) with nu = (1 - e^{-D}) D^{-1}, derivatives truncated at the
/// given order. Equals f(x-1) exactly once order >= deg f, and is
/// multiplicative at sufficient order.
Polynomial kappa_shift(const Polynomial& f, std::size_t order);

/// Both sides of (2n+1) b_2n = -sum_{p=1}^{n-1} C(2n,2p) b_2p b_{2n-2p}.
/// Throws for n < 2 (the right side is an empty sum at n = 1 and the
/// identity fails there).
std::pair<Rational, Rational> quadratic_identity(std::size_t n);

/// Analytic function handle for the numeric Euler-Maclaurin evaluator.
/// Implementations must provide exact derivatives up to
/// max_derivative_order(); the evaluator needs order 2*corrections + 1.
class SmoothFunction {
public:
    virtual ~SmoothFunction() = default;
    virtual Real value(const Real& x) const = 0;
    /// Exact/analytic definite integral over [a, b].
    virtual Real integral(const Real& a, const Real& b) const = 0;
    virtual Real derivative(std::size_t order, const Real& x) const = 0;
    virtual std::size_t max_derivative_order() const { return SIZE_MAX; }
};

/// f(x) = 1/(1+x) with all derivatives in closed form.
class ReciprocalShifted final : public SmoothFunction {
public:
    Real value(const Real& x) const override;
    Real integral(const Real& a, const Real& b) const override;
    Real derivative(std::size_t order, const Real& x) const override;
};

/// Exact-rational polynomial as a smooth function.
class PolynomialFunction final : public SmoothFunction {
public:
    explicit PolynomialFunction(Polynomial p) : p_(std::move(p)) {}
    Real value(const Real& x) const override;
    Real integral(const Real& a, const Real& b) const override;
    Real derivative(std::size_t order, const Real& x) const override;

private:
    Polynomial p_;
};

struct EulerMaclaurinResult {
    Real value;
    std::size_t terms_used;     // number of Bernoulli correction terms
    Real remainder_estimate;    // magnitude of the first omitted correction
};

/// integral_0^n f + (f(n)-f(0))/2 + sum_{p<=corrections}
/// b_2p/(2p)! (f^(2p-1)(n) - f^(2p-1)(0)). The remainder estimate is the
/// first-omitted-term heuristic, not a certified bound.
EulerMaclaurinResult euler_maclaurin_numeric(const SmoothFunction& f,
                                             unsigned long n,
                                             std::size_t corrections,
                                             mpfr_prec_t prec);

} // namespace summa
