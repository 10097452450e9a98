#include "summa/polynomial.hpp"

#include <sstream>

namespace summa {

namespace {
const Rational kZero;
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& coeff) {
    if (coeff.is_zero()) return Polynomial();
    std::vector<Rational> c(k + 1);
    c[k] = coeff;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(std::size_t k) const {
    if (k >= c_.size()) return kZero;
    return c_[k];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Rational Polynomial::eval(const Rational& x) const {
    Rational r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return Polynomial();
    std::vector<Rational> c(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Horner composition with (x + c).
    Polynomial x_plus_c(std::vector<Rational>{c, Rational(1)});
    Polynomial r;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x_plus_c + Polynomial::constant(c_[i]);
    return r;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) out << "-";
            first = false;
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        if (i == 0) {
            out << mag.str();
        } else {
            if (!unit) out << mag.str() << " ";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace summa
