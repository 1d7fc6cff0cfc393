#include "latvis/counting.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <set>
#include <thread>
#include <vector>

#include "latvis/format.hpp"

namespace latvis {

std::string_view to_string(Engine engine) {
    switch (engine) {
        case Engine::brute: return "brute";
        case Engine::sieve: return "sieve";
        case Engine::moebius: return "moebius";
    }
    return "unknown";
}

Engine parse_engine(std::string_view name) {
    if (name == "brute") return Engine::brute;
    if (name == "sieve") return Engine::sieve;
    if (name == "moebius") return Engine::moebius;
    throw DomainError("unknown engine '" + std::string(name) + "'");
}

long double CountResult::empirical_density() const {
    return static_cast<long double>(count) / (static_cast<long double>(x) * static_cast<long double>(x));
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    return __builtin_add_overflow(a, b, &out) ? UINT64_MAX : out;
}

// Rows and columns of [1, x]^2 that share a coordinate with some base point.
struct ExclusionMask {
    std::set<std::uint64_t> columns;
    std::set<std::uint64_t> rows;

    ExclusionMask(const ValidatedBaseSet& set, std::uint64_t x) {
        for (const auto& p : set.points()) {
            if (p.u >= 1 && static_cast<std::uint64_t>(p.u) <= x) columns.insert(static_cast<std::uint64_t>(p.u));
            if (p.v >= 1 && static_cast<std::uint64_t>(p.v) <= x) rows.insert(static_cast<std::uint64_t>(p.v));
        }
    }
};

void check_x(std::uint64_t x, std::uint64_t guard) {
    if (x < 1) throw DomainError("square side x must be >= 1");
    if (x > guard)
        throw ResourceError("x = " + std::to_string(x) + " exceeds the engine guard " + std::to_string(guard));
}

unsigned resolve_threads(unsigned requested, std::uint64_t x) {
    unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(t, x));
}

template <typename BandFn>
BandCount count_in_bands(std::uint64_t x, unsigned threads, BandFn band) {
    if (threads <= 1) return band(1, x);
    std::vector<std::future<BandCount>> parts;
    const std::uint64_t width = (x + threads - 1) / threads;
    for (std::uint64_t lo = 1; lo <= x; lo += width) {
        const std::uint64_t hi = std::min(x, lo + width - 1);
        parts.push_back(std::async(std::launch::async, band, lo, hi));
    }
    BandCount total;
    for (auto& f : parts) total += f.get();
    return total;
}

}  // namespace

Factorizer factorizer_for(const ValidatedBaseSet& set, std::uint64_t x) {
    std::uint64_t reach = 0;
    for (const auto& p : set.points()) reach = std::max(reach, abs_u64(p.u));
    return Factorizer(std::min(saturating_add(x, reach), kMaxSpfLimit));
}

BandCount count_brute_band(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                           std::uint64_t m_lo, std::uint64_t m_hi, const Factorizer& factorizer) {
    const ExclusionMask mask(set, x);
    BandCount out;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        for (std::uint64_t n = 1; n <= x; ++n) {
            if (mask.columns.contains(m) || mask.rows.contains(n)) {
                ++out.excluded;
                continue;
            }
            bool visible = true;
            for (const auto& p : set.points()) {
                const std::int64_t du = checked_difference(static_cast<std::int64_t>(m), p.u);
                const std::int64_t dv = checked_difference(static_cast<std::int64_t>(n), p.v);
                if (gcd_k(du, dv, set.k(), factorizer) > level.value()) {
                    visible = false;
                    break;
                }
            }
            if (visible) ++out.count;
        }
    }
    return out;
}

// Level 1 fails at (m, n) against (u, v) iff some prime p has p | m - u and
// p^k | n - v. The admissible d (d | m - u, d^k | n - v) are exactly the
// divisors of gcd_k, so gcd_k > 2 iff gcd_k has an odd prime factor or is
// divisible by 4. Level 2 therefore fails iff an odd prime p hits as above,
// or 4 | m - u and 4^k | n - v.
BandCount count_sieve_band(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                           std::uint64_t m_lo, std::uint64_t m_hi, const Factorizer& factorizer) {
    if (level.value() > 2) throw DomainError("sieve engine supports levels 1 and 2 only");
    const bool level_two = level.value() == 2;
    const int k = set.k().value();
    const ExclusionMask mask(set, x);

    const std::size_t words = (x + 63) / 64;
    std::vector<std::uint64_t> row_mask(words, 0);
    for (const std::uint64_t n : mask.rows) row_mask[(n - 1) / 64] |= std::uint64_t{1} << ((n - 1) % 64);
    std::vector<std::uint64_t> failed(words);

    // Marks every n in [1, x] with n = v (mod q).
    auto mark = [&](std::uint64_t q, std::int64_t v) {
        const auto r = static_cast<std::uint64_t>(((static_cast<i128>(v) - 1) % q + q) % q);
        for (std::uint64_t n = 1 + r; n <= x; n += q) failed[(n - 1) / 64] |= std::uint64_t{1} << ((n - 1) % 64);
    };

    BandCount out;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        if (mask.columns.contains(m)) {
            out.excluded += x;
            continue;
        }
        out.excluded += mask.rows.size();
        std::copy(row_mask.begin(), row_mask.end(), failed.begin());

        for (const auto& p : set.points()) {
            const std::int64_t du = checked_difference(static_cast<std::int64_t>(m), p.u);
            // A modulus beyond x + |v| can only hit n = v, which is excluded already.
            const std::uint64_t cap = saturating_add(x, abs_u64(p.v));
            factorizer.for_each_prime_factor(abs_u64(du), [&](std::uint64_t prime, int exponent) {
                if (level_two && prime == 2) {
                    if (exponent < 2) return;
                    if (const auto q = pow_at_most(4, k, cap)) mark(*q, p.v);
                    return;
                }
                if (const auto q = pow_at_most(prime, k, cap)) mark(*q, p.v);
            });
        }

        std::uint64_t failures = 0;
        for (const std::uint64_t w : failed) failures += static_cast<std::uint64_t>(std::popcount(w));
        out.count += x - failures;
    }
    return out;
}

CountResult count_brute(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                        const CountOptions& options) {
    check_x(x, options.max_x != 0 ? options.max_x : kDefaultBruteMaxX);
    const Factorizer factorizer = factorizer_for(set, x);
    const BandCount total = count_in_bands(x, resolve_threads(options.threads, x),
                                           [&](std::uint64_t lo, std::uint64_t hi) {
                                               return count_brute_band(set, x, level, lo, hi, factorizer);
                                           });
    return {total.count, total.excluded, x, level, set, Engine::brute};
}

CountResult count_sieve(const ValidatedBaseSet& set, std::uint64_t x, VisibilityLevel level,
                        const CountOptions& options) {
    if (level.value() > 2) throw DomainError("sieve engine supports levels 1 and 2 only");
    check_x(x, options.max_x != 0 ? options.max_x : kDefaultSieveMaxX);
    const Factorizer factorizer = factorizer_for(set, x);
    const BandCount total = count_in_bands(x, resolve_threads(options.threads, x),
                                           [&](std::uint64_t lo, std::uint64_t hi) {
                                               return count_sieve_band(set, x, level, lo, hi, factorizer);
                                           });
    return {total.count, total.excluded, x, level, set, Engine::sieve};
}

std::uint64_t count_moebius_origin(CurveExponent k, std::uint64_t x) {
    if (x < 1) throw DomainError("square side x must be >= 1");
    std::uint64_t dmax = k.value() == 1 ? x : 1;
    while (pow_at_most(dmax + 1, k.value(), x)) ++dmax;
    const auto mu = mobius_table(dmax);

    i128 total = 0;
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        if (mu[d] == 0) continue;
        const std::uint64_t dk = *pow_at_most(d, k.value(), x);
        total += static_cast<i128>(mu[d]) * static_cast<i128>(x / d) * static_cast<i128>(x / dk);
    }
    return static_cast<std::uint64_t>(total);
}

std::string count_csv_header() { return "engine,k,N,level,x,count,excluded,empirical_density"; }

std::string to_csv_row(const CountResult& r) {
    return std::string(to_string(r.engine)) + "," + std::to_string(r.k().value()) + "," +
           std::to_string(r.base_set.size()) + "," + std::to_string(r.level.value()) + "," + std::to_string(r.x) +
           "," + std::to_string(r.count) + "," + std::to_string(r.excluded) + "," +
           format_ratio8(r.count, static_cast<u128>(r.x) * r.x);
}

}  // namespace latvis
