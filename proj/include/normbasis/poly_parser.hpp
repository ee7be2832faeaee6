#pragma once

#include <string_view>

#include "normbasis/exact.hpp"

namespace normbasis {

/// Parses expressions in one variable x (or X) built from integer or decimal
/// constants with + - * / ^ and parentheses; juxtaposition multiplies
/// ("3x^2", "2(x+1)"). Division is only by nonzero constants. Throws ParseError.
UniPoly parse_polynomial(std::string_view text);

}  // namespace normbasis
