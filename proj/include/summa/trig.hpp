// Finite trigonometric identities, the partial-fraction and product
// expansions of cot and sin, and the closed form for zeta at even integers.
#pragma once

#include "summa/rational.hpp"
#include "summa/real.hpp"
#include "summa/series.hpp"

namespace summa {

struct IdentityReport {
    Real lhs, rhs, residual; // residual = |lhs - rhs|
};

/// prod_{p=1}^{n-1} sin(p pi / n) versus n 2^{1-n}, n >= 2.
IdentityReport sine_product_identity(unsigned n, int digits);

/// Finite cot identity at odd n = 2m+1:
/// cot z = 1/(n tan(z/n)) + sum_{p=1}^{m} 2n tan(z/n) /
///         (cos^2(p pi/n) (n tan(z/n))^2 - (n sin(p pi/n))^2).
/// Throws SingularInput near any pole of the evaluated terms.
IdentityReport cot_finite_identity(const Real& z, unsigned m);

/// cot z = 1/z + sum_p 2z/(z^2 - p^2 pi^2), summed ascending with an
/// integral-comparison tail bound. Throws on z near a multiple of pi.
SeriesResult<Real> cot_partial_fraction(const Real& z, const Real& eps,
                                        long max_terms);

/// sin z = n sin(z/n) prod_{k=1}^{m} (1 - sin^2(z/n)/sin^2(k pi/n)), n = 2m+1.
IdentityReport sin_finite_identity(const Real& z, unsigned m);

/// Partial product z prod_{p=1}^{P} (1 - z^2/(p^2 pi^2)); converges to sin z.
Real sin_product(const Real& z, unsigned long terms, int digits);

struct ZetaEven {
    Rational pi_coefficient; // zeta(2n) = pi_coefficient * pi^{2n}
    Real value;
};

/// zeta(2n) = (-1)^{n-1} 2^{2n-1} b_2n / (2n)! * pi^{2n}, n >= 1.
ZetaEven zeta_even(unsigned n, int digits);

} // namespace summa
