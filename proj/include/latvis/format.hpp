#pragma once

#include <cstdint>
#include <string>

#include "latvis/types.hpp"

namespace latvis {

std::string u128_to_string(u128 value);

// Fixed-point with 8 decimals, ties to even. Exact for the rational form.
std::string format_fixed8(long double value);
std::string format_ratio8(u128 numerator, u128 denominator);

// Scientific notation, 7 significant digits; used for error bounds and residuals.
std::string format_sci(long double value);

}  // namespace latvis
