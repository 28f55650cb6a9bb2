#pragma once

#include <string>
#include <string_view>

#include "equinoether/polynomial.hpp"

namespace equinoether {

// Syntax: terms joined by + / -, each term an optional rational coefficient
// and *-joined variable powers: `3*x[1,4]^2*x[2,7] - 1/2*x[1,1]`.  Pair
// variables use the letter y.  Whitespace is insignificant.  Shapes cannot be
// mixed.  Throws ParseError with the offending offset.
Poly parse_polynomial(std::string_view text);

// single term with coefficient 1
Monomial parse_monomial(std::string_view text);

std::string print_polynomial(const Poly& p);

}  // namespace equinoether
