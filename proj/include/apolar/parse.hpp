#ifndef APOLAR_PARSE_HPP
#define APOLAR_PARSE_HPP

#include <string>

#include "apolar/polynomial.hpp"

namespace apolar {

// Parses a polynomial from the CLI input syntax:
//
//   expression := term (('+'|'-') term)*
//   term       := [coef '*'] factor ('*' factor)*
//   factor     := var ['^' natural]
//   var        := ('y'|'x') natural          (index starting at 1)
//   coef       := integer | integer '/' positive-integer
//
// Whitespace is insignificant.  Variable yi (or xi) maps to internal index
// i-1.  The variable count of the result is the largest index that occurs,
// or min_vars if that is larger.  Malformed input raises input_error with
// the offending position in the message.
Polynomial parse_polynomial(const std::string& text, int min_vars = 0);

}  // namespace apolar

#endif  // APOLAR_PARSE_HPP
