#pragma once

#include <stdexcept>
#include <string>

#include "hqcf/poly.hpp"

namespace hqcf {

// Reported with 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Expression grammar over the atoms T, X, u and integer literals with
// + - * / ^ and parentheses; multiplication may be implicit ("7T",
// "(T^2-1)(T+1)"). The canonical printers emit a flat subset of this
// grammar (descending exponents, least non-negative coefficients, no
// unary plus), so print/parse round-trips are exact.
//
// parse_tpoly rejects X and non-polynomial division; parse_rational allows
// division as long as numerator and denominator are X-free; parse_xpoly
// allows X with rational-function coefficients.
TPoly parse_tpoly(const std::string& text, const FieldSpec* spec);
RationalFunc parse_rational(const std::string& text, const FieldSpec* spec);
XPoly parse_xpoly(const std::string& text, const FieldSpec* spec);

}  // namespace hqcf
