// Precision-tracked real numbers on top of MPFR. Every value carries its own
// working precision in bits; binary operations produce results at the wider
// of the two operand precisions, rounded to nearest. MPFR primitives round
// correctly, which is well inside the documented few-ulp-per-operation
// budget. Domain violations throw; no operation returns NaN.
#pragma once

#include <mpfr.h>

#include "summa/rational.hpp"

#include <string>

namespace summa {

/// Working precision for a requested number of decimal digits:
/// 4 bits per digit plus 32 guard bits.
inline mpfr_prec_t prec_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(4L * digits + 32);
}

class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long n, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    Real(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    /// Parses a decimal literal at the given precision.
    Real(const std::string& decimal, mpfr_prec_t prec);

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend Real operator*(long n, const Real& x) {
        Real r(x.prec());
        mpfr_mul_si(r.v_, x.v_, n, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& x, long n);

    friend bool operator==(const Real& a, const Real& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator<(const Real& a, const Real& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const Real& a, const Real& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend Real abs(const Real& x) {
        Real r(x.prec());
        mpfr_abs(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& x);
    friend Real exp(const Real& x);
    friend Real expm1(const Real& x);
    friend Real log(const Real& x);
    friend Real sin(const Real& x);
    friend Real cos(const Real& x);
    friend Real tan(const Real& x);
    friend Real cot(const Real& x);
    friend Real atan(const Real& x);
    friend Real atan2(const Real& y, const Real& x);
    /// x^n for any integer n (throws on 0^negative).
    friend Real pow_si(const Real& x, long n);
    /// x * 2^e, exact.
    friend Real ldexp2(const Real& x, long e);
    /// The same value re-rounded to a different working precision.
    friend Real at_prec(const Real& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e at the given precision (exact).
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    /// 10^e rounded to the given precision.
    static Real pow10(long e, mpfr_prec_t prec);

    /// Decimal rendering with the given number of significant digits,
    /// scientific notation, deterministic.
    std::string str(int digits) const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static mpfr_prec_t wider(const Real& a, const Real& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

} // namespace summa
