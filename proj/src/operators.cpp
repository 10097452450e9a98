#include "summa/operators.hpp"

#include "summa/errors.hpp"

#include <mutex>
#include <vector>

namespace summa {

namespace {

std::mutex g_memo_mutex;
std::vector<Polynomial> g_monomial_sums; // g_monomial_sums[r] = B(x^r)

// Extends the memo through degree r. Caller holds the lock.
void extend_monomial_sums(std::size_t r) {
    if (g_monomial_sums.empty())
        g_monomial_sums.push_back(Polynomial::monomial(1)); // B(1) = x
    const Polynomial x_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
    while (g_monomial_sums.size() <= r) {
        std::size_t k = g_monomial_sums.size(); // computing B(x^k)
        const Polynomial& prev = g_monomial_sums[k - 1]; // degree k, no constant term
        Polynomial rhs = x_plus_1 * prev;
        // B(prev) = sum_i prev_i B(x^i); the i = k term is (1/k) B(x^k), the
        // unknown, so move it to the left and rescale.
        for (std::size_t i = 1; i < k; ++i)
            rhs = rhs - prev.coeff(i) * g_monomial_sums[i];
        Rational scale = Rational(static_cast<long>(k)) /
                         Rational(static_cast<long>(k + 1));
        g_monomial_sums.push_back(scale * rhs);
    }
}

Polynomial monomial_sum(std::size_t r) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    extend_monomial_sums(r);
    return g_monomial_sums[r];
}

} // namespace

Polynomial discrete_sum(const Polynomial& p) {
    if (p.is_zero()) return Polynomial();
    Polynomial out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        out = out + c[i] * monomial_sum(i);
    }
    return out;
}

Polynomial apply_operator(OperatorKind op, const Polynomial& p) {
    switch (op) {
    case OperatorKind::Derivation: return p.derivative();
    case OperatorKind::Integration: return p.antiderivative();
    case OperatorKind::DiscreteSum: return discrete_sum(p);
    }
    throw PreconditionError("unknown operator kind");
}

Polynomial star(const Polynomial& f, const Polynomial& g, OperatorKind op,
                const Rational& mu) {
    if (op == OperatorKind::Derivation)
        throw PreconditionError("star product is defined for the Rota-Baxter "
                                "operators only, not Derivation");
    return apply_operator(op, f) * g + f * apply_operator(op, g) - mu * (f * g);
}

Polynomial rb_residual(const Polynomial& f, const Polynomial& g,
                       OperatorKind op, const Rational& mu) {
    if (op == OperatorKind::Derivation)
        throw PreconditionError("rb_residual is defined for the Rota-Baxter "
                                "operators only, not Derivation");
    Polynomial of = apply_operator(op, f);
    Polynomial og = apply_operator(op, g);
    return mu * apply_operator(op, f * g) + of * og -
           apply_operator(op, of * g + f * og);
}

} // namespace summa
