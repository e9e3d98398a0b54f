#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace diverge::nt {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ResourceError("64-bit overflow in multiplication");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ResourceError("64-bit overflow in addition");
    return r;
}

/// base^exp, or nullopt when the result exceeds `limit`.
inline std::optional<std::uint64_t> bounded_pow(std::uint64_t base, unsigned exp,
                                                std::uint64_t limit = UINT64_MAX) {
    std::uint64_t r = 1;
    for (unsigned e = 0; e < exp; ++e) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    if (r > limit) return std::nullopt;
    return r;
}

/// floor(x^(1/k)) for k >= 1.
inline std::uint64_t iroot(std::uint64_t x, unsigned k) {
    if (k == 0) throw PreconditionError("iroot: k must be >= 1");
    if (k == 1 || x < 2) return x;
    if (k >= 64) return 1;
    auto r = static_cast<std::uint64_t>(k == 2 ? std::sqrt(static_cast<double>(x))
                                                : std::pow(static_cast<double>(x), 1.0 / k));
    // pow is off by at most one or two near exact powers; walk to the exact floor
    while (r > 0 && !bounded_pow(r, k, x)) --r;
    while (bounded_pow(r + 1, k, x)) ++r;
    return r;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
        a %= n;
        if (a == 0) continue;
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// If x == p^k for an odd prime p, returns p.
inline std::optional<std::uint64_t> odd_prime_root(std::uint64_t x, unsigned k) {
    if ((x & 1) == 0 || x < 3) return std::nullopt;
    const std::uint64_t r = iroot(x, k);
    if (r < 3 || bounded_pow(r, k) != x || !is_prime(r)) return std::nullopt;
    return r;
}

/// Primes <= limit, sieve of Eratosthenes over odd numbers.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    const std::uint64_t half = (limit - 1) / 2; // index i <-> 2i+1, i >= 1
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[(m - 1) / 2] = true;
    }
    return out;
}

} // namespace diverge::nt
