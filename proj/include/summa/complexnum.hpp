// Complex arithmetic over a pair of Reals. log and sqrt use the principal
// branch with argument in (-pi, pi]. Integer powers go through binary
// exponentiation so that results are deterministic and sign-symmetric:
// negating the base exactly negates every odd-power intermediate.
#pragma once

#include "summa/real.hpp"

#include <string>

namespace summa {

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex from_real(const Real& r) {
        return Complex(r, Real(0L, r.prec()));
    }

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    Complex operator-() const { return Complex(-re, -im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Real& s, const Complex& z) {
        return Complex(s * z.re, s * z.im);
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }

    Complex conj() const { return Complex(re, -im); }
    /// |z|^2, exact formula re^2 + im^2.
    Real norm() const { return re * re + im * im; }

    std::string str(int digits) const;
};

/// |z| via hypot.
Real abs(const Complex& z);
/// Principal argument in (-pi, pi]; throws on z = 0.
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch; throws on z = 0.
Complex log(const Complex& z);
/// Principal branch square root.
Complex sqrt(const Complex& z);
/// z^n by binary exponentiation, any integer n (throws on 0^negative).
Complex pow_si(const Complex& z, long n);

} // namespace summa
