#pragma once

#include <json.hpp>

#include "pel/characters.hpp"
#include "pel/fermionic.hpp"

// JSON schemas (stable, keys in canonical alphabetical order):
//   rational:    "n" or "n/d" string
//   PadicNumber: {"p", "valuation" (int or "inf"), "digits" [LSF base p],
//                 "precision" (= digit count)}
//   polynomial:  {"coeffs" [rational strings, lowest degree first]}
//   cyclotomic:  {"order", "coeffs" [rational strings, low degree first]}
//   character:   {"modulus", "conductor", "order", "parity",
//                 "values" [{"a", "exp"}...]}  (exp of zeta_order; units only)

namespace pel {

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const PadicNumber& x);
nlohmann::json to_json(const RationalPolynomial& P);
nlohmann::json to_json(const CyclotomicElement& v);
nlohmann::json to_json(const DirichletCharacter& chi);
nlohmann::json trace_to_json(const std::vector<StabilizationStep>& trace);

} // namespace pel
