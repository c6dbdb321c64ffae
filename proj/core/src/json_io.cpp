#include "pel/json_io.hpp"

namespace pel {

using nlohmann::json;

json to_json(const Rational& q) {
    return to_string(q);
}

json to_json(const PadicNumber& x) {
    json j;
    j["p"] = x.context().p;
    if (x.is_exact_zero()) {
        j["valuation"] = "inf";
        j["digits"] = json::array();
        j["precision"] = 0;
    } else {
        j["valuation"] = x.valuation();
        j["digits"] = x.digit_vector();
        j["precision"] = x.known_digits();
    }
    return j;
}

json to_json(const RationalPolynomial& P) {
    json j;
    json coeffs = json::array();
    for (const auto& c : P.coefficients())
        coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

json to_json(const CyclotomicElement& v) {
    json j;
    j["order"] = v.order();
    json coeffs = json::array();
    for (const auto& c : v.coeffs())
        coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

json to_json(const DirichletCharacter& chi) {
    json j;
    j["modulus"] = chi.modulus();
    j["conductor"] = chi.conductor();
    j["order"] = chi.order();
    j["parity"] = chi.parity_delta();
    json values = json::array();
    for (long a = 0; a < chi.modulus(); ++a) {
        long e = chi.exponent_table()[a];
        if (e >= 0)
            values.push_back(json{{"a", a}, {"exp", e}});
    }
    j["values"] = std::move(values);
    return j;
}

json trace_to_json(const std::vector<StabilizationStep>& trace) {
    json arr = json::array();
    for (const auto& step : trace)
        arr.push_back(json{{"N", step.level}, {"S_N", to_json(step.partial)}});
    return arr;
}

} // namespace pel
