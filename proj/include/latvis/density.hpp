#pragma once

#include <cstdint>
#include <string>

#include "latvis/types.hpp"

namespace latvis {

inline constexpr long double kDefaultDensityTolerance = 1e-10L;
inline constexpr std::uint64_t kMaxTruncationPrime = 1'000'000'000;

/// A truncated Euler product together with a rigorous bound on
/// |value - exact density| covering the omitted tail and rounding.
struct DensityResult {
    long double value = 0;
    long double error_bound = 0;
    std::uint64_t truncation_prime = 0;
    std::uint64_t n = 0;  // cardinality of the base set
    CurveExponent k{1};
    VisibilityLevel level{1};
};

/// prod_p (1 - N / p^(k+1)), the density of points jointly Level-1 visible to
/// N pairwise k-visible base points. P is the smallest power of ten whose
/// certified bound meets `tol`; throws ResourceError when none up to
/// kMaxTruncationPrime does.
DensityResult level1_density(std::uint64_t n, CurveExponent k, long double tol = kDefaultDensityTolerance);

/// level1_density plus the Level-2 increment
/// (N / 2^(k+1)) (1 - 1 / 2^(k+1)) prod_{p > 2} (1 - N / p^(k+1)).
DensityResult level2_density(std::uint64_t n, CurveExponent k, long double tol = kDefaultDensityTolerance);

// Same products with the truncation prime fixed by the caller. The prime must
// satisfy N / P^(k+1) <= 1/2 so the tail bound applies.
DensityResult level1_density_truncated(std::uint64_t n, CurveExponent k, std::uint64_t truncation_prime);
DensityResult level2_density_truncated(std::uint64_t n, CurveExponent k, std::uint64_t truncation_prime);

/// Dispatches on level (1 or 2).
DensityResult density(std::uint64_t n, CurveExponent k, VisibilityLevel level,
                      long double tol = kDefaultDensityTolerance);

std::string density_csv_header();
std::string to_csv_row(const DensityResult& result);

}  // namespace latvis
