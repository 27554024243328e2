#pragma once

#include <string_view>

#include "holoconn/expr.hpp"

namespace holoconn {

/// Parses the expression grammar: integers, `i`, the two declared chart
/// variables, `+ - * / ^` with non-negative integer exponents, parentheses.
/// Whitespace is insignificant. Rationals are written as quotients.
///
/// Throws SyntaxError (with line/column) or UnknownVariable.
/// `line0`/`col0` offset reported positions for text embedded in a file.
Expr parse_expression(std::string_view text, const Chart& chart, int line0 = 1,
                      int col0 = 1);

/// Parses a constant expression (no chart variables allowed) into a Scalar.
/// Throws ArityError if the expression involves a chart variable.
Scalar parse_scalar(std::string_view text, const Chart& chart, int line0 = 1,
                    int col0 = 1);

}  // namespace holoconn
