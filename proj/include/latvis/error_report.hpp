#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latvis/counting.hpp"
#include "latvis/density.hpp"

namespace latvis {

struct ErrorReportRow {
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    long double expected = 0;    // x^2 * density
    long double delta = 0;       // count - expected
    long double normalized = 0;  // delta / (x * max(1, log x)^N)
};

struct ErrorReport {
    DensityResult density;
    std::vector<ErrorReportRow> rows;
};

/// Measures count - x^2 * density along `xs` (nonempty, strictly increasing)
/// with the sieve engine. The normalized column divides by x log^N x, the
/// shape of the error term for N <= k; the logarithm is floored at 1 so the
/// column stays finite for x < e.
ErrorReport empirical_error_report(const ValidatedBaseSet& set, VisibilityLevel level,
                                   std::span<const std::uint64_t> xs,
                                   long double tol = kDefaultDensityTolerance, const CountOptions& options = {});

std::string error_report_csv_header();
std::string to_csv_row(const ErrorReportRow& row);

}  // namespace latvis
