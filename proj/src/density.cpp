#include "latvis/density.hpp"

#include <cfloat>
#include <cmath>

#include "latvis/format.hpp"
#include "latvis/primes.hpp"
#include "latvis/visibility.hpp"

namespace latvis {

namespace {

void check_cardinality(std::uint64_t n, CurveExponent k) {
    if (n < 1) throw DomainError("base set cardinality N must be >= 1");
    if (n > max_base_set_size(k))
        throw DomainError("N = " + std::to_string(n) + " exceeds 2^(k+1) for k = " + std::to_string(k.value()));
}

// |sum_{p > P} log(1 - N / p^(k+1))| <= 2N sum_{m > P} m^-(k+1) <= 2N P^-k / k,
// valid once N / P^(k+1) <= 1/2.
long double log_tail_bound(std::uint64_t n, CurveExponent k, std::uint64_t prime) {
    const long double P = prime;
    const int kk = k.value();
    return 2.0L * n * std::pow(P, -kk) / kk;
}

bool tail_bound_applies(std::uint64_t n, CurveExponent k, std::uint64_t prime) {
    return static_cast<long double>(n) * std::pow(static_cast<long double>(prime), -(k.value() + 1)) <= 0.5L;
}

// prod_{2 < p <= P} (1 - N / p^(k+1)) and its certified absolute error.
struct OddProduct {
    long double value = 1;
    long double error = 0;
};

OddProduct odd_product(std::uint64_t n, CurveExponent k, std::uint64_t prime_limit) {
    if (prime_limit < 2 || !tail_bound_applies(n, k, prime_limit))
        throw DomainError("truncation prime " + std::to_string(prime_limit) +
                          " too small for the tail bound (need N / P^(k+1) <= 1/2)");
    OddProduct out;
    const long double N = n;
    const int exponent = k.value() + 1;
    std::uint64_t factors = 0;
    // Ascending order keeps the result reproducible.
    for_each_prime(3, prime_limit, [&](std::uint64_t p) {
        out.value *= 1.0L - N / std::pow(static_cast<long double>(p), exponent);
        ++factors;
    });
    const long double tail = std::expm1(log_tail_bound(n, k, prime_limit));
    // Two roundings per factor (the factor itself, then the product).
    const long double rounding = 2.0L * static_cast<long double>(factors + 1) * LDBL_EPSILON;
    out.error = out.value * (tail + rounding);
    return out;
}

// N / 2^(k+1); exact in long double for N < 2^64.
long double two_adic_share(std::uint64_t n, CurveExponent k) {
    return std::ldexp(static_cast<long double>(n), -(k.value() + 1));
}

std::uint64_t choose_truncation_prime(std::uint64_t n, CurveExponent k, long double tol,
                                      DensityResult (*eval)(std::uint64_t, CurveExponent, std::uint64_t),
                                      DensityResult& result) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    for (std::uint64_t prime = 10; prime <= kMaxTruncationPrime; prime *= 10) {
        if (!tail_bound_applies(n, k, prime)) continue;
        // Cheap pre-check on the tail alone before paying for the product.
        if (std::expm1(log_tail_bound(n, k, prime)) > tol) continue;
        result = eval(n, k, prime);
        if (result.error_bound <= tol) return prime;
    }
    throw ResourceError("tolerance " + format_sci(tol) + " needs a truncation prime beyond " +
                        std::to_string(kMaxTruncationPrime) + "; pass a looser tolerance");
}

}  // namespace

DensityResult level1_density_truncated(std::uint64_t n, CurveExponent k, std::uint64_t truncation_prime) {
    check_cardinality(n, k);
    const OddProduct odd = odd_product(n, k, truncation_prime);
    const long double two_factor = 1.0L - two_adic_share(n, k);  // exact
    return {two_factor * odd.value, two_factor * odd.error + two_factor * odd.value * LDBL_EPSILON,
            truncation_prime, n, k, VisibilityLevel(1)};
}

DensityResult level2_density_truncated(std::uint64_t n, CurveExponent k, std::uint64_t truncation_prime) {
    check_cardinality(n, k);
    const OddProduct odd = odd_product(n, k, truncation_prime);
    const long double share = two_adic_share(n, k);
    const long double level1_factor = 1.0L - share;
    const long double increment_factor = share * (1.0L - two_adic_share(1, k));
    const long double weight = level1_factor + increment_factor;
    const long double value = level1_factor * odd.value + increment_factor * odd.value;
    return {value, weight * odd.error + 4.0L * value * LDBL_EPSILON, truncation_prime, n, k, VisibilityLevel(2)};
}

DensityResult level1_density(std::uint64_t n, CurveExponent k, long double tol) {
    check_cardinality(n, k);
    DensityResult result;
    choose_truncation_prime(n, k, tol, &level1_density_truncated, result);
    return result;
}

DensityResult level2_density(std::uint64_t n, CurveExponent k, long double tol) {
    check_cardinality(n, k);
    DensityResult result;
    choose_truncation_prime(n, k, tol, &level2_density_truncated, result);
    return result;
}

DensityResult density(std::uint64_t n, CurveExponent k, VisibilityLevel level, long double tol) {
    switch (level.value()) {
        case 1: return level1_density(n, k, tol);
        case 2: return level2_density(n, k, tol);
        default: throw DomainError("densities are available for levels 1 and 2 only");
    }
}

std::string density_csv_header() { return "level,k,N,value,error_bound,truncation_prime"; }

std::string to_csv_row(const DensityResult& r) {
    return std::to_string(r.level.value()) + "," + std::to_string(r.k.value()) + "," + std::to_string(r.n) + "," +
           format_fixed8(r.value) + "," + format_sci(r.error_bound) + "," + std::to_string(r.truncation_prime);
}

}  // namespace latvis
