#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latvis/counting.hpp"
#include "latvis/density.hpp"

namespace latvis {

// Table 1 uses {(0,0),(1,1)}, table 2 uses {(0,0),(1,2),(2,1)}; rows k = 2..9.
inline constexpr int kTableMinK = 2;
inline constexpr int kTableMaxK = 9;
inline constexpr std::uint64_t kTableDefaultX = 10'000;

std::vector<LatticePoint> table_base_points(int which);

struct TableRow {
    int k = 0;
    std::uint64_t x = 0;
    std::uint64_t level1_count = 0;
    std::uint64_t level2_count = 0;
    DensityResult level1_theory;
    DensityResult level2_theory;

    long double level1_numerical() const;
    long double level2_numerical() const;
};

std::vector<TableRow> reproduce_table(int which, std::uint64_t x = kTableDefaultX, const CountOptions& options = {});

std::string table_csv_header();
std::string to_csv_row(const TableRow& row);

}  // namespace latvis
