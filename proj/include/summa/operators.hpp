// The three linear operators on Q[x]: derivation D, integration I (primitive
// vanishing at 0), and the discrete primitive B with B(f)(n) = f(1)+...+f(n).
// B is computed constructively from the non-homogeneous Rota-Baxter identity
//   B(x^{r+1}) = (x+1) B(x^r) - B(B(x^r)),
// solving the linear equation that the B(x^{r+1}) term on the right creates.
#pragma once

#include "summa/polynomial.hpp"

namespace summa {

enum class OperatorKind { Derivation, Integration, DiscreteSum };

/// The unique q in Q[x] with q(n) = sum_{i=1}^{n} p(i) for all naturals n
/// and q(0) = 0. Monomial results are memoized (thread-safe).
Polynomial discrete_sum(const Polynomial& p);

/// Applies the chosen operator.
Polynomial apply_operator(OperatorKind op, const Polynomial& p);

/// The intertwined product f*g = Op(f) g + f Op(g) - mu f g.
/// Defined for the two Rota-Baxter operators only; throws on Derivation.
Polynomial star(const Polynomial& f, const Polynomial& g, OperatorKind op,
                const Rational& mu);

/// mu Op(fg) + Op(f) Op(g) - Op(Op(f) g + f Op(g)).
/// Identically the zero polynomial for (Integration, mu=0) and
/// (DiscreteSum, mu=1).
Polynomial rb_residual(const Polynomial& f, const Polynomial& g,
                       OperatorKind op, const Rational& mu);

} // namespace summa
