#pragma once

#include <string>

#include "lcoh/lie_algebra.hpp"

namespace lcoh {

/// Parses the JSON algebra format:
///   {"name": ..., "dim": d, "labels": [...],
///    "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "value": "1/2"}]}]}
/// Indices are 0-based; only pairs with i < j may be listed.
/// Throws ParseError, or JacobiViolation when the bracket is not a Lie bracket.
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra load_algebra(const std::string& path);
std::string algebra_to_json(const LieAlgebra& algebra);

}  // namespace lcoh
