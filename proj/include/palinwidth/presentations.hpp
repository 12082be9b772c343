#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "palinwidth/amalgam.hpp"
#include "palinwidth/hnn.hpp"

namespace palinwidth {

using Presentation = std::variant<HnnPresentation, AmalgamPresentation>;

/// BS(m, n) over Z = <a>, A = mZ, B = nZ, phi(km) = kn. Rejects m or n < 2.
HnnPresentation baumslag_solitar(std::int64_t m, std::int64_t n);
/// <a> * <b>, trivial C, distinguished a.
AmalgamPresentation free_product_zz();
/// <a, b | a^3 = b^3>, distinguished a.
AmalgamPresentation amalgam_z3z();
/// Z4 *_{Z2} Z4 = <x, y | x^4, y^4, x^2 = y^2>, distinguished x (Case 2).
AmalgamPresentation amalgam_z4z2z4();

/// `bs:M,N`, `zz`, `z3z`, `z4z2z4`, or a path to a JSON presentation file.
Presentation load_presentation(std::string_view source);

}  // namespace palinwidth
