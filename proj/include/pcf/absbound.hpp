#pragma once

#include "pcf/numeric.hpp"

#include <numeric>
#include <string>

namespace pcf {

/**
 * An exact nonnegative magnitude of the form base^(1/root).
 *
 * Escape radii and extended absolute values involve fractional powers like
 * |a|^(1/2) or |c/2a|^(1/3). These are never evaluated numerically: every
 * comparison is cleared of fractional exponents by raising both sides to
 * the lcm of the roots, so the decision reduces to comparing two rationals.
 */
class AbsBound {
public:
    AbsBound() : base_(0), root_(1) {}

    explicit AbsBound(Rational value) : base_(std::move(value)), root_(1) {
        if (base_ < 0) throw std::domain_error("AbsBound: negative magnitude");
    }

    /// The magnitude base^(1/root).
    static AbsBound nth_root(Rational base, unsigned root) {
        if (root == 0) throw std::invalid_argument("AbsBound::nth_root: zero root");
        if (base < 0) throw std::domain_error("AbsBound::nth_root: negative base");
        AbsBound b;
        b.base_ = std::move(base);
        b.root_ = root;
        return b;
    }

    const Rational& base() const { return base_; }
    unsigned root() const { return root_; }

    /// This magnitude multiplied by a nonnegative rational factor.
    AbsBound scaled(const Rational& factor) const {
        if (factor < 0) throw std::domain_error("AbsBound::scaled: negative factor");
        AbsBound b;
        b.base_ = pow_rational(factor, root_) * base_;
        b.root_ = root_;
        return b;
    }

    /// Exact three-way comparison: -1, 0, +1.
    int compare(const AbsBound& other) const {
        unsigned l = std::lcm(root_, other.root_);
        Rational lhs = pow_rational(base_, l / root_);
        Rational rhs = pow_rational(other.base_, l / other.root_);
        return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
    }

    int compare(const Rational& value) const { return compare(AbsBound(value)); }

    friend bool operator<(const AbsBound& a, const AbsBound& b) { return a.compare(b) < 0; }
    friend bool operator>(const AbsBound& a, const AbsBound& b) { return a.compare(b) > 0; }
    friend bool operator<=(const AbsBound& a, const AbsBound& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const AbsBound& a, const AbsBound& b) { return a.compare(b) >= 0; }
    friend bool operator==(const AbsBound& a, const AbsBound& b) { return a.compare(b) == 0; }
    friend bool operator!=(const AbsBound& a, const AbsBound& b) { return a.compare(b) != 0; }

    static AbsBound max(const AbsBound& a, const AbsBound& b) { return a < b ? b : a; }

    std::string str() const {
        if (root_ == 1) return to_string(base_);
        return "(" + to_string(base_) + ")^(1/" + std::to_string(root_) + ")";
    }

private:
    Rational base_;  // >= 0
    unsigned root_;  // >= 1
};

}  // namespace pcf
