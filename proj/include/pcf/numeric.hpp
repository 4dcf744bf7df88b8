#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcf {

// All scalar arithmetic in this library is exact: arbitrary-precision
// integers and rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Sentinel returned by valuation() at q = 0.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// p-adic valuation of a nonzero integer.
inline long valuation_int(Int n, const Int& p) {
    if (n == 0) return kInfiniteValuation;
    if (p < 2) throw std::invalid_argument("valuation_int: p must be >= 2");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// p-adic valuation of a rational, v(num) - v(den); kInfiniteValuation at 0.
inline long valuation(const Rational& q, const Int& p) {
    if (q == 0) return kInfiniteValuation;
    return valuation_int(num(q), p) - valuation_int(den(q), p);
}

inline Int pow_int(const Int& base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

/// base^e for integer e (negative allowed; base != 0 required then).
inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0 && base == 0) throw std::domain_error("pow_rational: 0 to negative power");
    unsigned ue = static_cast<unsigned>(e < 0 ? -e : e);
    Rational r(pow_int(num(base), ue), pow_int(den(base), ue));
    if (e < 0) r = Rational(1) / r;
    return r;
}

/// Floor of the integer square root; n >= 0.
inline Int floor_sqrt(const Int& n) {
    if (n < 0) throw std::domain_error("floor_sqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = floor_sqrt(n);
    return root * root == n;
}

/// Exact square root of a nonnegative rational, if it is one.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(num(q), rn) || !is_perfect_square(den(q), rd)) return std::nullopt;
    return Rational(rn, rd);
}

inline int sign(const Int& n) { return n.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

inline std::string to_string(const Int& n) { return n.str(); }

/// Canonical text form "p" or "p/q" used by every serializer in the library.
inline std::string to_string(const Rational& q) {
    Int d = den(q);
    if (d == 1) return num(q).str();
    return num(q).str() + "/" + d.str();
}

struct RationalHash {
    std::size_t operator()(const Rational& q) const {
        std::size_t seed = 0;
        boost::hash_combine(seed, hash_value(num(q)));
        boost::hash_combine(seed, hash_value(den(q)));
        return seed;
    }
};

}  // namespace pcf
