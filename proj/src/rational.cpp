#include "latvis/rational.hpp"

#include <limits>

namespace latvis {

namespace {

u128 abs128(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 x) {
    if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
        throw DomainError("rational component overflows 64 bits");
    return static_cast<std::int64_t>(x);
}

// Multiply with overflow detection in 128 bits.
i128 mul128(i128 a, i128 b) {
    i128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw DomainError("rational intermediate overflows 128 bits");
    return out;
}

}  // namespace

Rational::Rational(i128 num, i128 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(abs128(num), abs128(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    num_ = narrow(num);
    den_ = narrow(den);
}

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so intermediates stay as small as possible.
    const auto g1 = static_cast<i128>(gcd128(abs128(a.num_), abs128(b.den_)));
    const auto g2 = static_cast<i128>(gcd128(abs128(b.num_), abs128(a.den_)));
    const i128 n1 = g1 == 0 ? a.num_ : a.num_ / g1;
    const i128 d2 = g1 == 0 ? b.den_ : b.den_ / g1;
    const i128 n2 = g2 == 0 ? b.num_ : b.num_ / g2;
    const i128 d1 = g2 == 0 ? a.den_ : a.den_ / g2;
    return Rational(mul128(n1, n2), mul128(d1, d2));
}

Rational operator+(const Rational& a, const Rational& b) {
    const i128 num = mul128(a.num_, b.den_) + mul128(b.num_, a.den_);
    return Rational(num, mul128(a.den_, b.den_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.numerator() << '/' << r.denominator();
}

}  // namespace latvis
