// Lambert-type exponential series, the symmetric Schlomilch identity, the
// Dedekind eta function and its tau -> -1/tau transformation, truncated
// Eisenstein lattice sums, Ramanujan's closed form at tau = i, and the
// lemniscatic (Gaussian-lattice) constants of Hurwitz.
#pragma once

#include "summa/complexnum.hpp"
#include "summa/rational.hpp"
#include "summa/series.hpp"

#include <cstddef>
#include <vector>

namespace summa {

/// Point in the upper half plane; the nome q = e^{2 pi i tau} then has
/// |q| < 1. Construction validates Im tau > 0.
class Tau {
public:
    explicit Tau(Complex value);
    static Tau purely_imaginary(const Real& im);
    const Complex& value() const { return v_; }
    /// -1/tau, again in the upper half plane.
    Tau inverted_negated() const;

private:
    Complex v_;
};

/// sum_{n>=1} n^p / (e^{2 pi n a} - 1) with a rigorous geometric tail bound.
SeriesResult<Real> lambert_sum(unsigned p, const Real& a, const Real& eps,
                               long max_terms);

/// |pi(a^{-1}+a)/12 - 1/2 - 2 pi sum_n ((n/a)/(e^{2 pi n/a}-1)
///  + (n a)/(e^{2 pi n a}-1))|.
Real schlomilch_residual(const Real& a, const Real& eps, long max_terms);

struct RamanujanCheck {
    Real series;     // sum_k k^{2l-1}/(e^{2 pi k} - 1)
    Rational closed; // b_{2l}/(4l)
    Real residual;
};

/// Requires odd l >= 3 (the vanishing of the weight-2l lattice sum at
/// tau = i needs l odd, and l >= 2).
RamanujanCheck ramanujan_check(unsigned l, int digits, long max_terms);

/// q^{1/24} prod_{n=1}^{N} (1 - q^n), truncated once the tail of the
/// log-product is below eps. Throws NonConvergence if |q| is too close to 1
/// for the given factor budget.
Complex dedekind_eta(const Tau& tau, const Real& eps, long max_factors);

/// |eta(-1/tau) - sqrt(tau/i) eta(tau)| with the principal square root.
Real eta_transform_residual(const Tau& tau, const Real& eps, long max_factors);

/// Residual of the logarithmic transformation identity
/// (1/2) log(tau/i) + pi i (tau + 1/tau)/12
///   = sum_m (1/m) (q^m/(1-q^m) - q'^m/(1-q'^m)),  q' = e^{-2 pi i/tau}.
Real eta_log_form_residual(const Tau& tau, const Real& eps, long max_terms);

/// Truncated lattice sum sum'_{max(|m|,|n|) <= R} (m + n tau)^{-k}, k even
/// >= 4. Shells are summed in increasing order; within a shell, points are
/// grouped into i-rotation orbits (w, iw, -w, -iw) with lexicographic
/// representatives, so that at tau = i the k = 2 mod 4 cancellation is exact
/// even in floating point.
Complex eisenstein_truncated(unsigned k, const Tau& tau, unsigned R, int digits);

/// Lemniscatic coefficients E_1..E_N: E_1 = 1/10 and
/// E_n = 3/((2n-3)(16n^2-1)) sum_{k=1}^{n-1} (4k-1)(4n-4k-1) C(4n,4k) E_k E_{n-k}.
std::vector<Rational> hurwitz_lemniscatic(std::size_t n_max);

/// omega = 2 int_0^1 dx/sqrt(1-x^4). Primary algorithm: pi / agm(1, sqrt 2).
Real lemniscate_constant(int digits);

/// Independent route: the termwise-integrated binomial series
///   arcsl(x) = sum_k C(2k,k) 4^{-k} x^{4k+1}/(4k+1)
/// evaluated at x0 = sqrt(sqrt(2)-1), where the complement substitution
/// x -> sqrt((1-x^2)/(1+x^2)) folds the integral onto [0, x0] twice:
/// omega = 4 arcsl(x0). Tail bound is elementary geometric (the binomial
/// factors are < 1).
Real lemniscate_binomial_series(int digits);

struct LatticeCheck {
    Real lattice; // real part of the truncated weight-4n sum at tau = i
    Real closed;  // (2 omega)^{4n} E_n / (4n)!
    Real residual;
};

LatticeCheck lemniscatic_lattice_check(unsigned n, unsigned R, int digits);

} // namespace summa
