#include "latvis/tables.hpp"

#include "latvis/format.hpp"

namespace latvis {

std::vector<LatticePoint> table_base_points(int which) {
    switch (which) {
        case 1: return {{0, 0}, {1, 1}};
        case 2: return {{0, 0}, {1, 2}, {2, 1}};
        default: throw DomainError("table must be 1 or 2, got " + std::to_string(which));
    }
}

long double TableRow::level1_numerical() const {
    return static_cast<long double>(level1_count) / (static_cast<long double>(x) * x);
}

long double TableRow::level2_numerical() const {
    return static_cast<long double>(level2_count) / (static_cast<long double>(x) * x);
}

std::vector<TableRow> reproduce_table(int which, std::uint64_t x, const CountOptions& options) {
    const auto points = table_base_points(which);
    std::vector<TableRow> rows;
    for (int k = kTableMinK; k <= kTableMaxK; ++k) {
        const CurveExponent exponent(k);
        const ValidatedBaseSet set = validate_base_set(points, exponent);
        TableRow row;
        row.k = k;
        row.x = x;
        row.level1_count = count_sieve(set, x, VisibilityLevel(1), options).count;
        row.level2_count = count_sieve(set, x, VisibilityLevel(2), options).count;
        row.level1_theory = level1_density(set.size(), exponent);
        row.level2_theory = level2_density(set.size(), exponent);
        rows.push_back(row);
    }
    return rows;
}

std::string table_csv_header() {
    return "k,level1_numerical,level1_theoretical,level2_numerical,level2_theoretical";
}

std::string to_csv_row(const TableRow& row) {
    const u128 area = static_cast<u128>(row.x) * row.x;
    return std::to_string(row.k) + "," + format_ratio8(row.level1_count, area) + "," +
           format_fixed8(row.level1_theory.value) + "," + format_ratio8(row.level2_count, area) + "," +
           format_fixed8(row.level2_theory.value);
}

}  // namespace latvis
