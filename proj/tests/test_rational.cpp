#include <doctest.h>

#include <limits>
#include <sstream>

#include "latvis/rational.hpp"

using namespace latvis;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    const Rational zero(0, -7);
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 9) * Rational(9, 2) == Rational(1));
    CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
    CHECK((Rational(5, 4) * Rational(4)).is_integer());
    std::ostringstream os;
    os << Rational(-3, 8);
    CHECK(os.str() == "-3/8");
}

TEST_CASE("rational overflow is reported") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * Rational(2), DomainError);
    CHECK_THROWS_AS(Rational(1, std::numeric_limits<std::int64_t>::max()) * Rational(1, 3), DomainError);
    // Cross-reduction keeps this product representable.
    CHECK(big * Rational(1, std::numeric_limits<std::int64_t>::max()) == Rational(1));
}
