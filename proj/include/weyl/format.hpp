#pragma once

#include <string>

#include "weyl/algebra.hpp"
#include "weyl/quantize.hpp"

namespace weyl {

enum class FormatMode { Text, Json };

// Text: terms in canonical order, "coeff q^n p^m h^k" with unit parts
// elided, e.g. "q^2 p^2 + 2 q p h + 1/2 h^2"; the zero polynomial is "0".
// Json: {"terms":[{"coeff":"num/den","h":k,"word":[{"g":"q","e":n},...]}]}
// with exact rational strings.
std::string format(const OperatorPoly& a, FormatMode mode);
std::string format(const ClassicalPoly& f, FormatMode mode);

// Reads back the JSON emitted by format(..., Json), bit-exact.
OperatorPoly poly_from_json(const std::string& text);

}  // namespace weyl
