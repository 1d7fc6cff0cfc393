#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latvis/errors.hpp"

namespace latvis {

// Size guards for the sieves below.
inline constexpr std::uint64_t kMaxPrimeListLimit = 200'000'000;
inline constexpr std::uint64_t kMaxStreamedPrimeLimit = 10'000'000'000;
inline constexpr std::uint64_t kMaxMobiusLimit = 200'000'000;
inline constexpr std::uint64_t kMaxSpfLimit = 50'000'000;

/// All primes <= limit, ascending. Empty for limit < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Streams the primes in [lo, hi] in ascending order through a segmented
/// sieve, so `hi` may be far larger than what a stored list would allow.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& fn);

/// mu(n) for 0 <= n <= limit (entry 0 is unused and set to 0). Linear sieve.
std::vector<std::int8_t> mobius_table(std::uint64_t limit);

/// Factorization backed by a smallest-prime-factor table up to `limit`, with
/// trial division for larger arguments. Immutable after construction.
class Factorizer {
public:
    explicit Factorizer(std::uint64_t limit = 0);

    std::uint64_t limit() const noexcept { return limit_; }

    /// Calls fn(p, e) for each prime power p^e exactly dividing n (n >= 1), p ascending.
    template <typename Fn>
    void for_each_prime_factor(std::uint64_t n, Fn&& fn) const {
        if (n <= limit_) {
            while (n > 1) {
                const std::uint64_t p = spf_[n];
                int e = 0;
                do {
                    n /= p;
                    ++e;
                } while (n % p == 0);
                fn(p, e);
            }
            return;
        }
        for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
            if (n % p != 0) continue;
            int e = 0;
            do {
                n /= p;
                ++e;
            } while (n % p == 0);
            fn(p, e);
            if (n <= limit_) {
                for_each_prime_factor(n, fn);
                return;
            }
        }
        if (n > 1) fn(n, 1);
    }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// Shared read-only factorizer for ad hoc gcd_k queries.
const Factorizer& default_factorizer();

}  // namespace latvis
