// Generic series summation with caller-supplied rigorous tail bounds.
// Terms are accumulated in strictly ascending index order (determinism);
// summation stops at the first cutoff whose tail bound meets eps.
#pragma once

#include "summa/complexnum.hpp"
#include "summa/errors.hpp"

#include <functional>

namespace summa {

template <typename T>
struct SeriesResult {
    T value;
    Real tail_bound; // rigorous upper bound on the omitted tail's magnitude
    long terms;
};

namespace detail {
inline std::string best_str(const Real& v) { return v.str(20); }
inline std::string best_str(const Complex& v) { return v.str(20); }
} // namespace detail

/// Sums term(1) + term(2) + ... until tail_bound(K) <= eps.
/// tail_bound(K) must bound |sum_{k>K} term(k)| from above and be
/// (eventually) nonincreasing; a bound may return +inf to mean
/// "not yet valid at this cutoff".
template <typename T>
SeriesResult<T> sum_series(const std::function<T(long)>& term,
                           const std::function<Real(long)>& tail_bound,
                           const Real& eps, long max_terms, T initial) {
    if (max_terms < 1)
        throw PreconditionError("sum_series: max_terms must be at least 1");
    T acc = std::move(initial);
    Real bound(eps.prec());
    for (long k = 1; k <= max_terms; ++k) {
        acc += term(k);
        bound = tail_bound(k);
        if (bound <= eps) return SeriesResult<T>{std::move(acc), bound, k};
    }
    throw NonConvergence("sum_series: tolerance not reached within max_terms",
                         detail::best_str(acc), bound.str(20), max_terms);
}

} // namespace summa
