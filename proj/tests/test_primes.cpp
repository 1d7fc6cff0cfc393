#include <doctest.h>

#include <numeric>
#include <vector>

#include "latvis/primes.hpp"

using namespace latvis;

namespace {

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// mu(n) by trial-division factorization.
int mobius_direct(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

}  // namespace

TEST_CASE("primes_up_to small limits") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("pi(10^6) = 78498, checked against trial division") {
    const auto primes = primes_up_to(1'000'000);
    CHECK(primes.size() == 78498);
    std::size_t independent = 0;
    for (std::uint64_t n = 2; n <= 1'000'000; ++n)
        if (is_prime_trial(n)) ++independent;
    CHECK(independent == 78498);
}

TEST_CASE("segmented stream matches the stored list") {
    std::vector<std::uint64_t> streamed;
    for_each_prime(0, 3'000'000, [&](std::uint64_t p) { streamed.push_back(p); });
    CHECK(streamed == primes_up_to(3'000'000));

    std::vector<std::uint64_t> window;
    for_each_prime(1'000'000'000, 1'000'000'100, [&](std::uint64_t p) { window.push_back(p); });
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1'000'000'000; n <= 1'000'000'100; ++n)
        if (is_prime_trial(n)) expected.push_back(n);
    CHECK(window == expected);
}

TEST_CASE("mobius_table") {
    const auto mu = mobius_table(100);
    CHECK(mu[1] == 1);
    CHECK(mu[6] == 1);
    CHECK(mu[12] == 0);
    CHECK(mu[97] == -1);
    int mertens = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) {
        CHECK(mu[n] == mobius_direct(n));
        mertens += mu[n];
    }
    CHECK(mertens == 1);
    CHECK_THROWS_AS(mobius_table(0), DomainError);
    CHECK_THROWS_AS(mobius_table(kMaxMobiusLimit + 1), ResourceError);
}

TEST_CASE("Factorizer reconstructs its argument, inside and beyond the table") {
    const Factorizer small(1000);
    for (std::uint64_t n : {1ULL, 2ULL, 360ULL, 997ULL, 1000ULL, 1001ULL, 999'983ULL * 2, 600851475143ULL,
                            (1ULL << 62), 1'000'003ULL * 1'000'033ULL}) {
        std::uint64_t product = 1;
        std::uint64_t last = 0;
        small.for_each_prime_factor(n, [&](std::uint64_t p, int e) {
            CHECK(p > last);
            CHECK(is_prime_trial(p));
            last = p;
            for (int i = 0; i < e; ++i) product *= p;
        });
        CHECK(product == n);
    }
    CHECK_THROWS_AS(Factorizer(kMaxSpfLimit + 1), ResourceError);
}
