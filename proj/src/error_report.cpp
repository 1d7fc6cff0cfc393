#include "latvis/error_report.hpp"

#include <algorithm>
#include <cmath>

#include "latvis/format.hpp"

namespace latvis {

ErrorReport empirical_error_report(const ValidatedBaseSet& set, VisibilityLevel level,
                                   std::span<const std::uint64_t> xs, long double tol,
                                   const CountOptions& options) {
    if (xs.empty()) throw DomainError("error report needs at least one x");
    if (!std::is_sorted(xs.begin(), xs.end()) || std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw DomainError("error report sizes must be strictly increasing");

    ErrorReport report{density(set.size(), set.k(), level, tol), {}};
    const long double rho = report.density.value;
    const auto n_bases = static_cast<int>(set.size());

    for (const std::uint64_t x : xs) {
        const CountResult counted = count_sieve(set, x, level, options);
        const long double side = x;
        ErrorReportRow row;
        row.x = x;
        row.count = counted.count;
        row.expected = side * side * rho;
        row.delta = static_cast<long double>(counted.count) - row.expected;
        row.normalized = row.delta / (side * std::pow(std::max(1.0L, std::log(side)), n_bases));
        report.rows.push_back(row);
    }
    return report;
}

std::string error_report_csv_header() { return "x,count,expected,delta,normalized_delta"; }

std::string to_csv_row(const ErrorReportRow& row) {
    return std::to_string(row.x) + "," + std::to_string(row.count) + "," + format_fixed8(row.expected) + "," +
           format_fixed8(row.delta) + "," + format_sci(row.normalized);
}

}  // namespace latvis
