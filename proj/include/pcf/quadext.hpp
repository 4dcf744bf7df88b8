#pragma once

#include "pcf/absbound.hpp"
#include "pcf/numeric.hpp"
#include "pcf/place.hpp"
#include "pcf/primes.hpp"

#include <string>
#include <utility>

namespace pcf {

/**
 * An element x + y*sqrt(D) of the quadratic field Q(sqrt(D)).
 *
 * D is a squarefree integer, not 0 or 1, so sqrt(D) is irrational and the
 * representation is unique. Values are immutable; all operations are exact.
 * Elements of fields with different D never compare equal, and mixing them
 * in arithmetic throws.
 */
class QuadExtElem {
public:
    QuadExtElem(Rational x, Rational y, Int d)
        : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        check_field(d_);
    }

    static QuadExtElem from_rational(Rational x, const Int& d) {
        return QuadExtElem(std::move(x), Rational(0), d);
    }

    static QuadExtElem sqrt_d(const Int& d) { return QuadExtElem(Rational(0), Rational(1), d); }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    QuadExtElem conjugate() const { return raw(x_, -y_, d_); }

    /// Field norm x^2 - D*y^2 (product of the two embeddings).
    Rational norm() const { return x_ * x_ - Rational(d_) * y_ * y_; }

    friend QuadExtElem operator+(const QuadExtElem& u, const QuadExtElem& v) {
        same_field(u, v);
        return raw(u.x_ + v.x_, u.y_ + v.y_, u.d_);
    }
    friend QuadExtElem operator-(const QuadExtElem& u, const QuadExtElem& v) {
        same_field(u, v);
        return raw(u.x_ - v.x_, u.y_ - v.y_, u.d_);
    }
    friend QuadExtElem operator*(const QuadExtElem& u, const QuadExtElem& v) {
        same_field(u, v);
        return raw(u.x_ * v.x_ + Rational(u.d_) * u.y_ * v.y_, u.x_ * v.y_ + u.y_ * v.x_, u.d_);
    }
    QuadExtElem operator-() const { return raw(-x_, -y_, d_); }

    friend QuadExtElem operator+(const QuadExtElem& u, const Rational& r) {
        return raw(u.x_ + r, u.y_, u.d_);
    }
    friend QuadExtElem operator+(const Rational& r, const QuadExtElem& u) { return u + r; }
    friend QuadExtElem operator-(const QuadExtElem& u, const Rational& r) {
        return raw(u.x_ - r, u.y_, u.d_);
    }
    friend QuadExtElem operator*(const QuadExtElem& u, const Rational& r) {
        return raw(u.x_ * r, u.y_ * r, u.d_);
    }
    friend QuadExtElem operator*(const Rational& r, const QuadExtElem& u) { return u * r; }

    /// Multiplicative inverse; throws on zero.
    QuadExtElem inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("QuadExtElem::inverse: zero element");
        return raw(x_ / n, -y_ / n, d_);
    }

    QuadExtElem pow(unsigned e) const {
        QuadExtElem acc = raw(Rational(1), Rational(0), d_);
        QuadExtElem b = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1u;
        }
        return acc;
    }

    /// Sign of the real number x + y*sqrt(D); requires D > 0.
    int sign() const {
        if (d_ < 0) throw std::domain_error("QuadExtElem::sign: complex field");
        int sx = pcf::sign(x_), sy = pcf::sign(y_);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // opposite signs: the larger of |x| and |y|sqrt(D) wins; equality is
        // impossible since sqrt(D) is irrational
        return x_ * x_ > Rational(d_) * y_ * y_ ? sx : sy;
    }

    friend bool operator==(const QuadExtElem& u, const QuadExtElem& v) {
        return u.d_ == v.d_ && u.x_ == v.x_ && u.y_ == v.y_;
    }
    friend bool operator!=(const QuadExtElem& u, const QuadExtElem& v) { return !(u == v); }

    /// Lexicographic order on (D, x, y); used only as a container key.
    friend bool operator<(const QuadExtElem& u, const QuadExtElem& v) {
        if (u.d_ != v.d_) return u.d_ < v.d_;
        if (u.x_ != v.x_) return u.x_ < v.x_;
        return u.y_ < v.y_;
    }

    std::string str() const {
        if (y_ == 0) return to_string(x_);
        std::string root = "sqrt(" + d_.str() + ")";
        std::string ypart;
        if (y_ == 1)
            ypart = root;
        else if (y_ == -1)
            ypart = "-" + root;
        else
            ypart = to_string(y_) + "*" + root;
        if (x_ == 0) return ypart;
        if (y_ > 0) return to_string(x_) + " + " + (y_ == 1 ? root : to_string(y_) + "*" + root);
        return to_string(x_) + " - " + (y_ == -1 ? root : to_string(-y_) + "*" + root);
    }

private:
    // results of arithmetic stay in an already-validated field
    static QuadExtElem raw(Rational x, Rational y, Int d) {
        QuadExtElem e;
        e.x_ = std::move(x);
        e.y_ = std::move(y);
        e.d_ = std::move(d);
        return e;
    }

    static void check_field(const Int& d) {
        if (d == 0 || d == 1 || !is_squarefree(d))
            throw std::invalid_argument("QuadExtElem: D must be squarefree and not 0 or 1");
    }

    static void same_field(const QuadExtElem& u, const QuadExtElem& v) {
        if (u.d_ != v.d_) throw std::invalid_argument("QuadExtElem: mismatched fields");
    }

    QuadExtElem() = default;

    Rational x_, y_;
    Int d_;
};

inline QuadExtElem zero_like(const QuadExtElem& e) {
    return QuadExtElem::from_rational(Rational(0), e.d());
}
inline Rational zero_like(const Rational&) { return Rational(0); }

/**
 * max over the places w of Q(sqrt(D)) above p of |x + y*sqrt(D)|_w, as an
 * exact magnitude, computed coordinate-wise:
 *
 *   odd p not dividing D:  max(|x|_p, |y|_p)            (exact)
 *   odd p dividing D:      max(|x|_p, p^(-1/2)|y|_p)    (exact, ramified)
 *   p = 2:                 max(|x|_2, |y|_2)            (within a factor 2)
 *
 * At p = 2 the coordinate formula can differ from the true maximum by a
 * factor of 2 in either direction; callers must compare against 2*C when
 * certifying escape and against C/..2*C when enforcing boundedness. Escape
 * logic in bounds.hpp applies that slack.
 */
inline AbsBound quad_abs_max_at(const QuadExtElem& xi, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("quad_abs_max_at: p must be prime");
    Rational ax = abs_at(xi.x(), Place::finite(p));
    Rational ay = abs_at(xi.y(), Place::finite(p));
    if (p != 2 && xi.d() % p == 0) {
        // ramified: |y*sqrt(D)|_w = (|y|_p^2 / p)^(1/2)
        AbsBound ybound = AbsBound::nth_root(ay * ay / Rational(p), 2);
        return AbsBound::max(AbsBound(ax), ybound);
    }
    return AbsBound(ax >= ay ? ax : ay);
}

/// True iff |xi| > bound at some archimedean embedding of Q(sqrt(D)).
/// Exact: for D > 0 both real embeddings are tested by sign arithmetic,
/// for D < 0 the squared complex modulus x^2 - D*y^2 is rational.
inline bool arch_abs_exceeds(const QuadExtElem& xi, const AbsBound& bound) {
    if (xi.d() < 0) {
        Rational sq = xi.norm();  // |xi|^2, a nonnegative rational
        return pow_rational(sq, bound.root()) > bound.base() * bound.base();
    }
    // |t|^root > base  <=>  t^root > base or t^root < -base
    auto embedding_exceeds = [&](const QuadExtElem& t) {
        QuadExtElem u = t.pow(bound.root());
        return (u - bound.base()).sign() > 0 || (u + bound.base()).sign() < 0;
    };
    return embedding_exceeds(xi) || embedding_exceeds(xi.conjugate());
}

struct QuadExtHash {
    std::size_t operator()(const QuadExtElem& e) const {
        RationalHash h;
        std::size_t seed = h(e.x());
        boost::hash_combine(seed, h(e.y()));
        return seed;
    }
};

}  // namespace pcf
