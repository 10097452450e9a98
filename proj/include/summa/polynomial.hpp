// Dense univariate polynomials over exact rationals. Coefficients are stored
// lowest degree first with no trailing zeros, so two polynomials are equal
// iff their coefficient vectors are equal. The zero polynomial has no degree
// (std::nullopt), never a fake numeric one.
#pragma once

#include "summa/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace summa {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static Polynomial constant(const Rational& a) {
        return Polynomial(std::vector<Rational>{a});
    }
    /// coeff * x^k
    static Polynomial monomial(std::size_t k, const Rational& coeff = Rational(1));

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^k (zero beyond the stored coefficients).
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    Polynomial operator-() const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;
    /// Formal derivative.
    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    /// f(x + c), exact Taylor shift.
    Polynomial shifted(const Rational& c) const;

    /// Human-readable form like "1/3 x^3 + 1/2 x^2 + 1/6 x".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace summa
