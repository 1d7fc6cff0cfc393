#include <doctest.h>

#include <cmath>
#include <vector>

#include "latvis/error_report.hpp"

using namespace latvis;

TEST_CASE("single base point, x = 100") {
    const auto set = validate_base_set(std::vector<LatticePoint>{{0, 0}}, CurveExponent(2));
    const std::vector<std::uint64_t> xs{100};
    const auto report = empirical_error_report(set, VisibilityLevel(1), xs);
    REQUIRE(report.rows.size() == 1);
    const auto& row = report.rows[0];
    CHECK(row.count == count_moebius_origin(CurveExponent(2), 100));
    CHECK(std::fabs(row.delta) / 1e4L < 1e-2L);
    CHECK(row.expected == doctest::Approx(1e4 * 0.831907).epsilon(1e-5));
}

TEST_CASE("two base points at x = 10^4 land near the Euler product") {
    const auto set = validate_base_set(std::vector<LatticePoint>{{0, 0}, {1, 1}}, CurveExponent(2));
    const std::vector<std::uint64_t> xs{10'000};
    const auto report = empirical_error_report(set, VisibilityLevel(1), xs);
    const long double empirical = static_cast<long double>(report.rows[0].count) / 1e8L;
    CHECK(std::fabs(empirical - 0.67689274L) < 5e-4L);
}

TEST_CASE("degenerate x = 1 stays finite") {
    const auto set = validate_base_set(std::vector<LatticePoint>{{0, 0}, {1, 2}, {2, 1}}, CurveExponent(3));
    const std::vector<std::uint64_t> xs{1};
    for (std::uint64_t level = 1; level <= 2; ++level) {
        const auto report = empirical_error_report(set, VisibilityLevel(level), xs);
        CHECK(std::isfinite(static_cast<double>(report.rows[0].delta)));
        CHECK(std::isfinite(static_cast<double>(report.rows[0].normalized)));
    }
}

TEST_CASE("size list must be nonempty and increasing") {
    const auto set = validate_base_set(std::vector<LatticePoint>{{0, 0}}, CurveExponent(2));
    CHECK_THROWS_AS(empirical_error_report(set, VisibilityLevel(1), std::vector<std::uint64_t>{}), DomainError);
    CHECK_THROWS_AS(empirical_error_report(set, VisibilityLevel(1), std::vector<std::uint64_t>{20, 10}), DomainError);
    CHECK_THROWS_AS(empirical_error_report(set, VisibilityLevel(1), std::vector<std::uint64_t>{10, 10}), DomainError);
}

TEST_CASE("CSV row") {
    CHECK(error_report_csv_header() == "x,count,expected,delta,normalized_delta");
    const ErrorReportRow row{10, 87, 83.1907L, 3.8093L, 0.1654L};
    CHECK(to_csv_row(row).rfind("10,87,83.19070000,3.80930000,", 0) == 0);
}
