#include "summa/real.hpp"

#include "summa/errors.hpp"

#include <cstdio>
#include <vector>

namespace summa {

Real::Real(const std::string& decimal, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw DomainError("real: cannot parse \"" + decimal + "\"");
    }
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw DomainError("real: division by zero");
    Real r(Real::wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& x, long n) {
    if (n == 0) throw DomainError("real: division by zero");
    Real r(x.prec());
    mpfr_div_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw DomainError("real: sqrt of a negative number");
    Real r(x.prec());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.prec());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real expm1(const Real& x) {
    Real r(x.prec());
    mpfr_expm1(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    if (x.sign() <= 0) throw DomainError("real: log requires a positive argument");
    Real r(x.prec());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r(x.prec());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r(x.prec());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real tan(const Real& x) {
    Real r(x.prec());
    mpfr_tan(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real cot(const Real& x) {
    // Reject arguments whose sine is below the precision-aware guard; the
    // result there would be pure noise.
    Real s = sin(x);
    Real guard = Real::pow2(-static_cast<long>(x.prec()) / 2, x.prec());
    if (abs(s) < guard)
        throw SingularInput("real: cot argument too close to a pole");
    Real r(x.prec());
    mpfr_cot(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real atan(const Real& x) {
    Real r(x.prec());
    mpfr_atan(r.v_, x.v_, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    if (x.is_zero() && y.is_zero())
        throw DomainError("real: atan2(0, 0) is undefined");
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

Real pow_si(const Real& x, long n) {
    if (x.is_zero() && n < 0)
        throw DomainError("real: zero to a negative power");
    Real r(x.prec());
    mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

Real ldexp2(const Real& x, long e) {
    Real r(x.prec());
    mpfr_mul_2si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

Real Real::pow10(long e, mpfr_prec_t prec) {
    Real ten(10, prec);
    return pow_si(ten, e);
}

std::string Real::str(int digits) const {
    if (digits < 1) digits = 1;
    // %Re gives deterministic round-to-nearest scientific notation.
    int need = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::vector<char> buf(static_cast<std::size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

} // namespace summa
