#ifndef DISTGEOM_EXPR_HPP
#define DISTGEOM_EXPR_HPP

#include <string>

#include "distgeom/ratfunc.hpp"

namespace distgeom {

// Parses an expression over the table's symbols into a rational function.
// Grammar: + - * / ^ with parentheses, integer/rational/decimal literals,
// unary minus. '^' takes a nonnegative integer exponent.
RationalFunction parse_expression(const std::string& text, const SymbolTablePtr& table);

// Same, but requires the result to be a polynomial.
MultiPoly parse_polynomial(const std::string& text, const SymbolTablePtr& table);

}  // namespace distgeom

#endif
