// Exact arbitrary-size rational numbers on top of GMP's mpq layer.
// Values are always canonical: positive denominator, gcd(|num|, den) = 1,
// so equality is structural and identity residuals can be checked exactly.
#pragma once

#include <gmp.h>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace summa {

class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, unsigned long den);
    /// Parses "p/q" or "p" with an optional leading minus on the numerator.
    explicit Rational(const std::string& text);

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }
    Rational abs() const {
        Rational r;
        mpq_abs(r.v_, v_);
        return r;
    }
    /// Integer power; negative exponents invert (throws on zero base).
    Rational pow(long e) const;

    /// Renders as "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    double to_double() const { return mpq_get_d(v_); }

    static Rational binomial(unsigned long n, unsigned long k);
    static Rational factorial(unsigned long n);

    // Raw handle for interop (mpfr conversion lives in real.hpp).
    const __mpq_struct* raw() const { return v_; }

private:
    mpq_t v_;
};

} // namespace summa
