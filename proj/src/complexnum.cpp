#include "summa/complexnum.hpp"

#include "summa/errors.hpp"

namespace summa {

Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.norm();
    if (n.is_zero()) throw DomainError("complex: division by zero");
    Complex num = a * b.conj();
    return Complex(num.re / n, num.im / n);
}

Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero())
        throw DomainError("complex: argument of zero is undefined");
    return atan2(z.im, z.re);
}

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return Complex(m * cos(z.im), m * sin(z.im));
}

Complex log(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero())
        throw DomainError("complex: log of zero");
    return Complex(log(z.norm()) / 2, arg(z));
}

Complex sqrt(const Complex& z) {
    if (z.re.is_zero() && z.im.is_zero()) return Complex(z.prec());
    Real r = abs(z);
    Real half_arg = arg(z) / 2;
    Real m = sqrt(r);
    return Complex(m * cos(half_arg), m * sin(half_arg));
}

Complex pow_si(const Complex& z, long n) {
    mpfr_prec_t p = z.prec();
    if (n == 0) return Complex(Real(1, p), Real(0L, p));
    bool invert = n < 0;
    unsigned long e = static_cast<unsigned long>(invert ? -n : n);
    if (invert && z.re.is_zero() && z.im.is_zero())
        throw DomainError("complex: zero to a negative power");
    Complex base = z;
    Complex acc(Real(1, p), Real(0L, p));
    bool acc_set = false;
    while (e > 0) {
        if (e & 1UL) {
            acc = acc_set ? acc * base : base;
            acc_set = true;
        }
        e >>= 1;
        if (e > 0) base = base * base;
    }
    if (invert) {
        Complex one(Real(1, p), Real(0L, p));
        return one / acc;
    }
    return acc;
}

std::string Complex::str(int digits) const {
    std::string r = re.str(digits);
    std::string i = im.str(digits);
    if (!i.empty() && i[0] == '-') return r + i + " i";
    return r + "+" + i + " i";
}

} // namespace summa
