#pragma once

#include <cstdint>
#include <ostream>

#include "latvis/types.hpp"

namespace latvis {

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Arithmetic runs in 128-bit and throws DomainError when the
/// reduced result does not fit back into 64 bits.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(i128 num, i128 den);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace latvis
