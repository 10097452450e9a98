#include "summa/json_io.hpp"

#include "summa/errors.hpp"

namespace summa {

nlohmann::json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string())
        throw DomainError("json: rational must be a \"p/q\" string");
    return Rational(j.get<std::string>());
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return nlohmann::json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw DomainError("json: polynomial must be {\"coeffs\": [...]}");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

nlohmann::json bernoulli_table_to_json(const BernoulliTable& t) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : t.values) values.push_back(v.str());
    return nlohmann::json{
        {"convention",
         t.convention == Convention::MinusHalf ? "MinusHalf" : "PlusHalf"},
        {"values", values}};
}

} // namespace summa
