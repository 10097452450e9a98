// The Legendre integral int_0^inf sin(ax)/(e^{2 pi x} - 1) dx in closed
// form, as a partial-fraction series, and by direct adaptive quadrature,
// plus the Bernoulli moment integrals that tie the even zeta values to the
// exponential kernel.
#pragma once

#include "summa/rational.hpp"
#include "summa/real.hpp"
#include "summa/series.hpp"

#include <utility>

namespace summa {

/// (1/4)(e^a + 1)/(e^a - 1) - 1/(2a). For |a| < 1e-3 the equivalent
/// Bernoulli series sum_n b_2n a^{2n-1}/(2 (2n)!) is used to avoid the
/// 1/(2a) cancellation. a = 0 throws unless allow_limit, in which case the
/// limit value 0 is returned.
Real legendre_closed_form(const Real& a, bool allow_limit = false);

/// sum_{n>=1} a/(a^2 + 4 pi^2 n^2), summed directly to a cutoff and
/// completed with an Euler-Maclaurin tail (exact arctangent integral plus
/// Bernoulli derivative corrections). tail_bound reports twice the first
/// omitted correction, valid here because the high derivatives of the
/// summand are sign-constant and monotone beyond the cutoff.
SeriesResult<Real> legendre_series(const Real& a, const Real& eps);

struct IntegralReport {
    Real series_value; // via (2 pi)^{-2n} (2n-1)! zeta(2n)
    Real closed_value; // (-1)^{n-1} b_2n / (4n)
    Real residual;
};

/// Numeric comparison of the two moment routes for
/// (-1)^{n-1} b_2n = 4n int_0^inf t^{2n-1}/(e^{2 pi t} - 1) dt.
IntegralReport bernoulli_moment(unsigned n, int digits);

/// Both sides of the moment identity as exact rationals: the zeta route
/// (2n-1)! r_n / 4^n (r_n the rational zeta(2n)/pi^{2n} coefficient) and the
/// closed form (-1)^{n-1} b_2n/(4n). Equal for every n >= 1.
std::pair<Rational, Rational> bernoulli_moment_exact(unsigned n);

/// Adaptive Simpson quadrature of sin(ax)/(e^{2 pi x} - 1) over (0, upper],
/// with the removable x = 0 endpoint evaluated as its limit a/(2 pi).
/// Throws NonConvergence if the tolerance is not reached.
Real legendre_quadrature(const Real& a, const Real& upper, const Real& eps);

} // namespace summa
