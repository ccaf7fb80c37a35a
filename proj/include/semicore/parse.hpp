#pragma once

#include <string_view>
#include <vector>

#include "semicore/field.hpp"
#include "semicore/poly.hpp"

namespace semicore {

/// "Q" or "Fp:<p>" (also accepts "GF(p)"). Errc::SyntaxError otherwise.
Field parse_field(std::string_view text);

/// Optional sign, decimal integer, and for Q an optional "/denominator".
/// Errc::BadScalar on anything else.
Scalar parse_scalar(std::string_view text, Field field);

/// Sums of terms `c`, `c*t^k`, `t^k`, `c*t`, `t` joined by + and -.
/// Whitespace is ignored and repeated exponents are added together.
/// Errc::SyntaxError (with the byte offset), Errc::NegativeExponent, Errc::BadScalar.
Poly parse_poly(std::string_view text, Field field);

/// Comma separated integers, e.g. "4,11,13".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace semicore
