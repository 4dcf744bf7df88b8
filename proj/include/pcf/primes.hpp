#pragma once

#include "pcf/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace pcf {

namespace detail {
inline constexpr std::uint32_t kSieveLimit = 1u << 20;
}

/// Primes below 2^20, computed once. Everything this library factors is tiny;
/// larger inputs fall through to big-integer trial division.
inline const std::vector<std::uint32_t>& prime_table() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<bool> composite(detail::kSieveLimit, false);
        std::vector<std::uint32_t> primes;
        for (std::uint32_t i = 2; i < detail::kSieveLimit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < detail::kSieveLimit; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return primes;
    }();
    return table;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (std::uint32_t p : prime_table()) {
        Int bp(p);
        if (bp * bp > n) return true;
        if (n % bp == 0) return n == bp;
    }
    // big-integer path: continue trial division past the sieve
    Int p = Int(detail::kSieveLimit) | 1;
    while (p * p <= n) {
        if (n % p == 0) return false;
        p += 2;
    }
    return true;
}

/// Prime factorization of n >= 1, sorted by prime.
inline std::vector<std::pair<Int, int>> factor(Int n) {
    if (n < 1) throw std::domain_error("factor: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    for (std::uint32_t p : prime_table()) {
        Int bp(p);
        if (bp * bp > n) break;
        strip(bp);
    }
    if (n > 1) {
        Int p = Int(detail::kSieveLimit) | 1;
        while (p * p <= n) {
            strip(p);
            p += 2;
        }
        if (n > 1) out.emplace_back(n, 1);
    }
    return out;
}

inline bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    Int m = abs(n);
    for (const auto& [p, e] : factor(m))
        if (e > 1) return false;
    return true;
}

/// Product of the primes appearing to odd exponent, with the sign of n.
/// n = squarefree_kernel(n) * square.
inline Int squarefree_kernel(const Int& n) {
    if (n == 0) throw std::domain_error("squarefree_kernel: zero argument");
    Int k = 1;
    for (const auto& [p, e] : factor(abs(n)))
        if (e % 2 == 1) k *= p;
    return n < 0 ? -k : k;
}

/// Squarefree divisors of |n| (including 1), sorted ascending.
inline std::vector<Int> squarefree_divisors(const Int& n) {
    if (n == 0) throw std::domain_error("squarefree_divisors: zero argument");
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factor(abs(n))) {
        std::size_t sz = divs.size();
        for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * p);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Primes dividing numerator or denominator, sorted.
inline std::vector<Int> support(const Rational& q) {
    std::vector<Int> out;
    if (q == 0) return out;
    for (const auto& [p, e] : factor(abs(num(q)))) out.push_back(p);
    for (const auto& [p, e] : factor(den(q))) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pcf
