#include "latvis/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace latvis {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

void guard(std::uint64_t limit, std::uint64_t max, const char* what) {
    if (limit > max)
        throw ResourceError(std::string(what) + " limit " + std::to_string(limit) + " exceeds guard " +
                            std::to_string(max));
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    guard(limit, kMaxPrimeListLimit, "prime list");
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& fn) {
    guard(hi, kMaxStreamedPrimeLimit, "streamed prime");
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo) return;

    const auto base = primes_up_to(isqrt(hi));
    constexpr std::uint64_t kSegment = 1u << 20;
    std::vector<char> composite(kSegment);

    for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
        const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (const std::uint64_t p : base) {
            if (p * p > seg_hi) break;
            std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= seg_hi; j += p) composite[j - seg_lo] = 1;
        }
        for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
            if (!composite[n - seg_lo]) fn(n);
        if (seg_hi == hi) break;
    }
}

std::vector<std::int8_t> mobius_table(std::uint64_t limit) {
    guard(limit, kMaxMobiusLimit, "Mobius table");
    if (limit < 1) throw DomainError("Mobius table limit must be >= 1");
    std::vector<std::int8_t> mu(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    mu[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (const std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

Factorizer::Factorizer(std::uint64_t limit) : limit_(limit) {
    guard(limit, kMaxSpfLimit, "smallest-prime-factor table");
    if (limit_ < 2) {
        limit_ = 1;
        spf_.assign(2, 1);
        return;
    }
    spf_.assign(limit_ + 1, 0);
    for (std::uint64_t i = 2; i <= limit_; ++i) {
        if (spf_[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit_; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

const Factorizer& default_factorizer() {
    static const Factorizer table(1u << 20);
    return table;
}

}  // namespace latvis
