#include <doctest.h>

#include <cmath>
#include <numbers>

#include "latvis/density.hpp"

using namespace latvis;

namespace {

// 1 / zeta(s) from partial sums with the integral tail enclosure
// (M+1)^(1-s)/(s-1) <= sum_{n>M} n^-s <= M^(1-s)/(s-1). Returns the midpoint
// and half-width of the resulting interval.
std::pair<long double, long double> inverse_zeta(int s, std::uint64_t terms) {
    long double partial = 0;
    for (std::uint64_t n = terms; n >= 1; --n) partial += std::pow(static_cast<long double>(n), -s);
    const long double lo_tail = std::pow(static_cast<long double>(terms + 1), 1 - s) / (s - 1);
    const long double hi_tail = std::pow(static_cast<long double>(terms), 1 - s) / (s - 1);
    const long double inv_lo = 1.0L / (partial + hi_tail);
    const long double inv_hi = 1.0L / (partial + lo_tail);
    return {(inv_lo + inv_hi) / 2, (inv_hi - inv_lo) / 2 + 1e-17L};
}

}  // namespace

TEST_CASE("level-1 densities reported in the tables") {
    const auto two = level1_density(2, CurveExponent(2), 1e-8L);
    CHECK(std::fabs(two.value - 0.67689274L) <= 5e-9L);
    CHECK(two.error_bound <= 1e-8L);
    CHECK(two.level.value() == 1);

    const auto three = level1_density(3, CurveExponent(2), 1e-8L);
    CHECK(std::fabs(three.value - 0.53456687L) <= 5e-9L);
}

TEST_CASE("1 / zeta(2) = 6 / pi^2 for a single base point and k = 1") {
    const auto r = level1_density(1, CurveExponent(1), 1e-6L);
    CHECK(r.error_bound <= 1e-6L);
    const long double expected = 6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
    CHECK(std::fabs(r.value - expected) <= r.error_bound);
    CHECK(std::fabs(r.value - 0.607927L) < 1e-6L);
}

TEST_CASE("N = 2^(k+1) makes the level-1 density exactly zero") {
    for (int k = 1; k <= 6; ++k) {
        const auto n = std::uint64_t{1} << (k + 1);
        const auto l1 = level1_density(n, CurveExponent(k), 1e-6L);
        CHECK(l1.value == 0.0L);
        CHECK(l1.error_bound == 0.0L);
        CHECK(level2_density(n, CurveExponent(k), 1e-6L).value > 0.0L);
    }
}

TEST_CASE("level-2 densities reported in the tables") {
    CHECK(std::fabs(level2_density(2, CurveExponent(2), 1e-8L).value - 0.87431979L) <= 5e-9L);
    CHECK(std::fabs(level2_density(3, CurveExponent(3), 1e-8L).value - 0.94555518L) <= 5e-9L);
    CHECK(std::fabs(level2_density(3, CurveExponent(5), 1e-8L).value - 0.99493640L) <= 5e-9L);
}

TEST_CASE("single base point gives 1 / zeta(k + 1)") {
    for (int k = 2; k <= 6; ++k) {
        const auto r = level1_density(1, CurveExponent(k));
        const auto [zeta_inv, halfwidth] = inverse_zeta(k + 1, 200'000);
        CHECK(std::fabs(r.value - zeta_inv) <= r.error_bound + halfwidth);
    }
}

TEST_CASE("monotone in N and in k") {
    for (int k = 1; k <= 4; ++k) {
        const CurveExponent exponent(k);
        const std::uint64_t full = std::uint64_t{1} << (k + 1);
        long double previous = 2;
        for (std::uint64_t n = 1; n < full && n <= 6; ++n) {
            const auto r = level1_density(n, exponent, 1e-6L);
            CHECK(r.value < previous);
            previous = r.value;
        }
    }
    for (std::uint64_t n = 1; n <= 3; ++n) {
        long double previous = -1;
        for (int k = 1; k <= 9; ++k) {
            const auto r = level1_density(n, CurveExponent(k), 1e-6L);
            CHECK(r.value > previous);
            previous = r.value;
        }
    }
}

TEST_CASE("level 2 strictly exceeds level 1") {
    for (int k = 1; k <= 9; ++k)
        for (std::uint64_t n = 1; n <= 4; ++n) {
            const auto l1 = level1_density(n, CurveExponent(k), 1e-6L);
            const auto l2 = level2_density(n, CurveExponent(k), 1e-6L);
            CHECK(l2.value > l1.value);
        }
}

TEST_CASE("doubling the truncation prime moves the value by less than the bounds") {
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t n = 1; n <= 3; ++n) {
            const CurveExponent exponent(k);
            for (std::uint64_t prime : {1000ULL, 20000ULL}) {
                const auto a = level1_density_truncated(n, exponent, prime);
                const auto b = level1_density_truncated(n, exponent, 2 * prime);
                CHECK(std::fabs(a.value - b.value) <= a.error_bound + b.error_bound);
                const auto c = level2_density_truncated(n, exponent, prime);
                const auto d = level2_density_truncated(n, exponent, 2 * prime);
                CHECK(std::fabs(c.value - d.value) <= c.error_bound + d.error_bound);
            }
        }
}

TEST_CASE("truncation prime is the smallest adequate power of ten") {
    const auto r = level1_density(2, CurveExponent(2), 1e-10L);
    CHECK(r.truncation_prime == 1'000'000);
    CHECK(r.error_bound <= 1e-10L);
    CHECK(level1_density_truncated(2, CurveExponent(2), 100'000).error_bound > 1e-10L);
}

TEST_CASE("density errors") {
    CHECK_THROWS_AS(level1_density(9, CurveExponent(2)), DomainError);
    CHECK_THROWS_AS(level2_density(0, CurveExponent(2)), DomainError);
    CHECK_THROWS_AS(level1_density(1, CurveExponent(2), 0.0L), DomainError);
    CHECK_THROWS_AS(level1_density(1, CurveExponent(1), 1e-12L), ResourceError);
    CHECK_THROWS_AS(density(1, CurveExponent(2), VisibilityLevel(3)), DomainError);
    CHECK_THROWS_AS(level1_density_truncated(4, CurveExponent(1), 2), DomainError);
}

TEST_CASE("large k stays finite and close to one") {
    const auto r = level1_density(3, CurveExponent(63), 1e-10L);
    CHECK(r.value > 0.999999L);
    CHECK(r.value <= 1.0L);
}

TEST_CASE("CSV row") {
    const auto r = level2_density(3, CurveExponent(5));
    CHECK(density_csv_header() == "level,k,N,value,error_bound,truncation_prime");
    const auto row = to_csv_row(r);
    CHECK(row.rfind("2,5,3,0.99493640,", 0) == 0);
}
