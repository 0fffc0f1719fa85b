#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symcurve/monomial.hpp"

namespace symcurve::detail {

/// One parsed additive term: sign, coefficient text ("1" when elided) and
/// monomial. Shared by the field-generic polynomial parser.
struct TextTerm {
  bool negative = false;
  std::string coeff;
  Monomial mono{1};
};

/// Splits "3*x1^2*x2 - x3^2 + 1/2" into terms. Throws std::invalid_argument
/// with a position message on malformed input.
std::vector<TextTerm> splitPolyText(std::string_view text, int arity);

}  // namespace symcurve::detail
