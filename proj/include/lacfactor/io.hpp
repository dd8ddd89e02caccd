#pragma once

#include "lacfactor/core.hpp"
#include "lacfactor/oracle.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lacfactor {

struct NamedPoly {
    LacunaryPoly poly;
    std::vector<std::string> vars;
};

// Natural order: digit runs compare numerically, so x2 < x10.
bool natural_less(const std::string& a, const std::string& b);

// Signed sums of products of rationals, variables, powers and parenthesized
// subexpressions. Variables are sorted naturally unless `vars` is given, in
// which case any other identifier is an error.
NamedPoly parse(const std::string& text, const std::vector<std::string>& vars = {});

// Descending graded-lex order; "0" for the zero polynomial.
std::string format(const LacunaryPoly& f, const std::vector<std::string>& vars);

nlohmann::json poly_to_json(const LacunaryPoly& f, const std::vector<std::string>& vars);
NamedPoly poly_from_json(const nlohmann::json& j);
// Accepts either a polynomial object or an {"expr": "..."} object.
NamedPoly read_poly_text(const std::string& text);

nlohmann::json factors_to_json(const FactorList& fl, const std::vector<std::string>& vars);

std::vector<std::string> default_vars(std::size_t n);

}  // namespace lacfactor
