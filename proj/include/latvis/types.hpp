#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

#include "latvis/errors.hpp"

namespace latvis {

using u128 = unsigned __int128;
using i128 = __int128;

struct LatticePoint {
    std::int64_t u = 0;
    std::int64_t v = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << '(' << p.u << ',' << p.v << ')';
}

// Exponent of the curve family y - v = r (x - u)^k, 1 <= k <= 63.
class CurveExponent {
public:
    static constexpr int kMax = 63;

    explicit CurveExponent(int k) : k_(k) {
        if (k < 1 || k > kMax)
            throw DomainError("curve exponent k must lie in [1, 63], got " + std::to_string(k));
    }

    constexpr int value() const noexcept { return k_; }
    friend constexpr bool operator==(CurveExponent, CurveExponent) = default;

private:
    int k_;
};

// Level-L visibility: at most L - 1 lattice points strictly inside the curve segment.
class VisibilityLevel {
public:
    explicit VisibilityLevel(std::uint64_t level) : level_(level) {
        if (level < 1) throw DomainError("visibility level must be >= 1");
    }

    constexpr std::uint64_t value() const noexcept { return level_; }
    friend constexpr bool operator==(VisibilityLevel, VisibilityLevel) = default;

private:
    std::uint64_t level_;
};

// base^exp if it does not exceed `cap`, otherwise nullopt. Intermediates are 128-bit.
constexpr std::optional<std::uint64_t> pow_at_most(std::uint64_t base, int exp, std::uint64_t cap) {
    u128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > cap) return std::nullopt;
        if (base <= 1) break;
    }
    return static_cast<std::uint64_t>(acc);
}

constexpr std::uint64_t abs_u64(std::int64_t x) noexcept {
    return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

// a - b, or DomainError when the difference leaves the signed 64-bit range.
inline std::int64_t checked_difference(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw DomainError("coordinate difference overflows 64 bits");
    return out;
}

}  // namespace latvis
