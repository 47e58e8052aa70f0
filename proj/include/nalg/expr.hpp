#pragma once

#include "nalg/polynomial.hpp"
#include "nalg/rep.hpp"
#include "nalg/taylor.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace nalg {

// Grammar (products always carry explicit parentheses; there is no
// precedence for a non-associative product):
//   poly   = [ "-" ] term { ("+"|"-") term } ;
//   term   = [ coeff [ "*" ] ] factor | coeff ;
//   factor = var | "(" factor factor ")" ;
//   var    = "x" digits | "x" ;            bare x is x1
//   coeff  = digits [ "/" digits ] ;
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t column)
        : std::runtime_error(msg), column(column) {}
    size_t column; // 1-based
};

Polynomial parse_polynomial(const std::string& text, Flavor flavor);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

using json = nlohmann::json;

// leaf -> integer, node -> [left,right], unit -> [], associative -> [letters]
json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const json& j, Flavor flavor);

// {"flavor": ..., "terms": [{"coeff": "p/q", "monomial": ...}, ...]}
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json expansion_to_json(const TaylorExpansion& e);
json decomposition_to_json(const Decomposition& d);

} // namespace nalg
