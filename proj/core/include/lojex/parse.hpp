#pragma once

#include <array>
#include <string>

#include "lojex/bipoly.hpp"

namespace lojex {

// Variable names used for parsing and printing. "x1"/"x2" are always
// accepted as aliases for the first/second variable.
struct VariableNames {
    std::string first = "x";
    std::string second = "y";
};

// Parse a textual polynomial expression into a fully expanded BiPoly.
//
// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/'| juxtaposition) factor)*
//   factor := base ('^' nonneg-int)?
//   base   := number | variable | '(' expr ')'
//
// Numbers are integers, fractions a/b, or finite decimals (converted
// exactly). Division is only allowed by a numeric literal. Throws
// ParseError with the offending position.
BiPoly parse_polynomial(const std::string& text, const VariableNames& vars = {});

// Canonical text form: terms sorted by the exponent of the first
// variable descending, then the second. parse(format(p)) == p.
std::string format_polynomial(const BiPoly& p, const VariableNames& vars = {});

}  // namespace lojex
