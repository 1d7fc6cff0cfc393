#include "latvis/format.hpp"

#include <cmath>
#include <cstdio>

namespace latvis {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

std::string format_fixed8(long double value) {
    // printf rounds the exact binary value under the default (ties-to-even) mode.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8Lf", value);
    return buf;
}

std::string format_ratio8(u128 numerator, u128 denominator) {
    constexpr u128 kScale = 100'000'000;
    const u128 scaled = numerator * kScale;
    u128 q = scaled / denominator;
    const u128 r = scaled % denominator;
    if (2 * r > denominator || (2 * r == denominator && (q & 1) != 0)) ++q;

    std::string frac = u128_to_string(q % kScale);
    frac.insert(frac.begin(), 8 - frac.size(), '0');
    return u128_to_string(q / kScale) + "." + frac;
}

std::string format_sci(long double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Le", value);
    return buf;
}

}  // namespace latvis
