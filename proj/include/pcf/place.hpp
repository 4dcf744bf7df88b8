#pragma once

#include "pcf/numeric.hpp"
#include "pcf/primes.hpp"

#include <compare>
#include <string>

namespace pcf {

/**
 * A place of Q: the archimedean absolute value or a p-adic one.
 * Finite places are indexed by a prime, verified on construction.
 */
class Place {
public:
    Place() : p_(0) {}  // archimedean

    static Place archimedean() { return Place(Int(0)); }

    static Place finite(Int p) {
        if (!is_prime(p)) throw std::invalid_argument("Place::finite: " + p.str() + " is not prime");
        return Place(std::move(p));
    }

    bool is_archimedean() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }

    const Int& prime() const {
        if (is_archimedean()) throw std::logic_error("Place::prime: archimedean place");
        return p_;
    }

    std::string str() const { return is_archimedean() ? "inf" : p_.str(); }

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
    // archimedean first, then primes ascending
    friend bool operator<(const Place& a, const Place& b) { return a.p_ < b.p_; }

private:
    explicit Place(Int p) : p_(std::move(p)) {}
    Int p_;  // 0 encodes the archimedean place
};

/// |q| at the given place, as an exact rational: the usual absolute value, or
/// p^(-v_p(q)) at a finite place. |0| = 0 everywhere.
inline Rational abs_at(const Rational& q, const Place& v) {
    if (q == 0) return Rational(0);
    if (v.is_archimedean()) return abs(q);
    long val = valuation(q, v.prime());
    Int pk = pow_int(v.prime(), static_cast<unsigned>(val < 0 ? -val : val));
    return val >= 0 ? Rational(1, pk) : Rational(pk);
}

}  // namespace pcf
