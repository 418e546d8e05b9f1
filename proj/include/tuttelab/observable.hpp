#pragma once

#include "tuttelab/multipoly.hpp"

#include <string>

namespace tuttelab {

// Parses an observable expression over the edge variables into a polynomial
// with rational coefficients. Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' digits)?
//   atom    := rational | variable | '(' expr ')' | '-' factor
//   variable:= 't' '_'? digits          (1-based edge index)
//   rational:= digits ('/' digits)?
//
// Whitespace is free. Variable indices above `arity` are rejected, as is a
// zero denominator. The result never mentions the spin variable.
RatPoly parse_observable(const std::string& text, int arity);

}  // namespace tuttelab
