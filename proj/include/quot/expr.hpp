#pragma once

#include <string>
#include <vector>

#include "quot/poly.hpp"

namespace quot {

// Parses a polynomial class expression over the given generator names.
// Grammar: rational/integer literals (e.g. 3, 1/2), generator identifiers,
// +, -, *, ^ with the usual precedence, parentheses. No division beyond
// rational literals: classes are polynomial.
MultiPoly parse_class_expression(const std::string& text, const std::vector<std::string>& generators);

} // namespace quot
