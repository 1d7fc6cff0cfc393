#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "latvis/primes.hpp"
#include "latvis/visibility.hpp"

namespace latvis {

enum class Engine { brute, sieve, moebius };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view name);

inline constexpr std::uint64_t kDefaultBruteMaxX = 100'000;
inline constexpr std::uint64_t kDefaultSieveMaxX = 1'000'000;

struct CountOptions {
    std::uint64_t max_x = 0;  // 0 selects the engine default
    unsigned threads = 0;     // 0 selects std::thread::hardware_concurrency()
};

/// Joint Level-L visibility count over the square [1, x]^2. Points sharing a
/// coordinate with any base point are skipped and tallied in `excluded`.
struct CountResult {
    std::uint64_t count = 0;
    std::uint64_t excluded = 0;
    std::uint64_t x = 0;
    VisibilityLevel level{1};
    ValidatedBaseSet base_set;
    Engine engine = Engine::brute;

    CurveExponent k() const noexcept { return base_set.k(); }
    long double empirical_density() const;
};

// Partial tally over the columns m in [m_lo, m_hi]. Counting over any
// partition of [1, x] into bands and summing reproduces the full count.
struct BandCount {
    std::uint64_t count = 0;
    std::uint64_t excluded = 0;

    BandCount& operator+=(const BandCount& o) {
        count += o.count;
        excluded += o.excluded;
        return *this;
    }
};

BandCount count_brute_band(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                           std::uint64_t m_lo, std::uint64_t m_hi, const Factorizer& factorizer);

// Level must be 1 or 2.
BandCount count_sieve_band(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                           std::uint64_t m_lo, std::uint64_t m_hi, const Factorizer& factorizer);

/// Checks gcd_k(m - u_j, n - v_j) <= level for every base point and every grid point.
CountResult count_brute(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                        const CountOptions& options = {});

/// Same contract as count_brute for levels 1 and 2, by marking residue classes
/// of failing points column by column.
CountResult count_sieve(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                        const CountOptions& options = {});

/// #{(m, n) in [1, x]^2 : gcd_k(m, n) = 1} via
/// sum_{d^k <= x} mu(d) floor(x / d) floor(x / d^k).
std::uint64_t count_moebius_origin(CurveExponent k, std::uint64_t x);

/// Factorizer sized for counting on [1, x]^2 against `set`.
Factorizer factorizer_for(const ValidatedBaseSet& set, std::uint64_t x);

std::string count_csv_header();
std::string to_csv_row(const CountResult& result);

}  // namespace latvis
