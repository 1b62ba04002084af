// Text form of polynomials:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := int | var | '(' expr ')'
//   var    := KIND '[' int (',' int)? ']'     KIND in {S,T,W,Z,X}
// Whitespace is free between tokens.  Variables must exist in the table.
#ifndef SPHCOX_PARSER_HPP
#define SPHCOX_PARSER_HPP

#include <string>

#include "sphcox/poly.hpp"

namespace sphcox {

LaurentPoly parse_poly(const std::string& text, const VarTablePtr& table);

} // namespace sphcox

#endif
