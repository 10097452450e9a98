// JSON wire formats: rationals as "p/q" strings (minus sign on the
// numerator, bare "p" when the denominator is 1), polynomials as
// {"coeffs": [...]} lowest degree first, Bernoulli tables as value arrays
// with a "convention" field.
#pragma once

#include "summa/bernoulli.hpp"
#include "summa/polynomial.hpp"

#include <json.hpp>

namespace summa {

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json bernoulli_table_to_json(const BernoulliTable& t);

} // namespace summa
