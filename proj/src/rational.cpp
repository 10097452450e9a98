#include "summa/rational.hpp"

#include "summa/errors.hpp"

#include <cctype>

namespace summa {

Rational::Rational(long num, unsigned long den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, den);
    mpq_canonicalize(v_);
}

Rational::Rational(const std::string& text) {
    // Accept only [-]digits[/digits]; mpq_set_str is laxer than we want.
    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        bool seen_slash = false, digit_before = false, digit_after = false;
        for (; i < s.size(); ++i) {
            if (s[i] == '/') {
                if (seen_slash || !digit_before) return false;
                seen_slash = true;
            } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                (seen_slash ? digit_after : digit_before) = true;
            } else {
                return false;
            }
        }
        return digit_before && (!seen_slash || digit_after);
    };
    if (!valid(text)) throw DomainError("rational: cannot parse \"" + text + "\"");
    mpq_init(v_);
    if (mpq_set_str(v_, text.c_str(), 10) != 0) {
        mpq_clear(v_);
        throw DomainError("rational: cannot parse \"" + text + "\"");
    }
    if (mpz_sgn(mpq_denref(v_)) == 0) {
        mpq_clear(v_);
        throw DomainError("rational: zero denominator in \"" + text + "\"");
    }
    mpq_canonicalize(v_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational: division by zero");
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("rational: zero to a negative power");
        return Rational(0);
    }
    Rational r;
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), ue);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), ue);
    if (e < 0) mpq_inv(r.v_, r.v_);
    // Powers of a canonical fraction stay canonical, but the sign may sit in
    // the denominator after mpq_inv.
    mpq_canonicalize(r.v_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    Rational r;
    mpz_bin_uiui(mpq_numref(r.v_), n, k);
    return r;
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.v_), n);
    return r;
}

} // namespace summa
