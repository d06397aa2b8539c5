#pragma once

// Integer factorization for group orders: trial division up to 1e6, then
// Miller-Rabin and Pollard-rho (Brent) on the cofactor.

#include <leetile/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace leetile {

using PrimePower = std::pair<std::uint64_t, int>;

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000'000'000'000'000ULL;

// LEETILE_FACTOR_BOUND overrides the default when set to a positive integer.
inline std::uint64_t default_factor_bound() {
    if (const char *env = std::getenv("LEETILE_FACTOR_BOUND")) {
        char *end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return value;
        }
    }
    return kDefaultFactorBound;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

inline std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) {
        return 2;
    }
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        std::uint64_t y = 2;
        std::uint64_t x = 2;
        std::uint64_t g = 1;
        std::uint64_t q = 1;
        std::uint64_t ys = 2;
        const std::uint64_t m = 128;
        for (std::uint64_t r = 1; g == 1; r <<= 1U) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

inline void split_large(std::uint64_t n, std::vector<std::uint64_t> &primes) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const auto d = pollard_brent(n);
    split_large(d, primes);
    split_large(n / d, primes);
}

} // namespace detail

// Prime factorization in ascending prime order. Orders above `bound` are
// rejected outright.
inline std::vector<PrimePower> factorize(std::uint64_t n, std::uint64_t bound = default_factor_bound()) {
    if (n == 0) {
        throw DomainError("cannot factor 0");
    }
    if (n > bound) {
        throw FactorizationError("order too large to factor: " + std::to_string(n) +
                                 " exceeds bound " + std::to_string(bound));
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= kTrialDivisionLimit && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    detail::split_large(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> result;
    for (auto p : primes) {
        if (!result.empty() && result.back().first == p) {
            ++result.back().second;
        } else {
            result.emplace_back(p, 1);
        }
    }
    return result;
}

} // namespace leetile
