#pragma once

#include "pcf/numeric.hpp"
#include "pcf/quadext.hpp"

#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace pcf {

inline Rational one_like(const Rational&) { return Rational(1); }
inline QuadExtElem one_like(const QuadExtElem& e) {
    return QuadExtElem::from_rational(Rational(1), e.d());
}

inline Rational scalar_from_int(const Rational&, int k) { return Rational(k); }
inline QuadExtElem scalar_from_int(const QuadExtElem& model, int k) {
    return QuadExtElem::from_rational(Rational(k), model.d());
}

inline Rational invert(const Rational& r) {
    if (r == 0) throw std::domain_error("invert: zero");
    return Rational(1) / r;
}
inline QuadExtElem invert(const QuadExtElem& e) { return e.inverse(); }

/**
 * Dense univariate polynomial with exact coefficients (index i = coefficient
 * of z^i). Trailing zeros are trimmed, so degree() is honest; the zero
 * polynomial has degree -1.
 *
 * The coefficient type is Rational or QuadExtElem. QuadExtElem carries its
 * field tag with it, so zeros are always derived from existing coefficients,
 * never default-constructed.
 */
template <typename T>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const T& leading() const {
        if (c_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
        return c_.back();
    }

    T coeff(int i) const {
        if (i >= 0 && i < static_cast<int>(c_.size())) return c_[static_cast<std::size_t>(i)];
        if (!c_.empty()) return zero_like(c_.front());
        if constexpr (std::is_default_constructible_v<T>)
            return T{};
        else
            throw std::logic_error("Poly::coeff: zero polynomial over a tagged field");
    }

    const std::vector<T>& coeffs() const { return c_; }

    /// Horner evaluation; the point may live in an extension of the
    /// coefficient field (rational coefficients at a quadratic point).
    template <typename U>
    U eval(const U& z) const {
        U acc = zero_like(z);
        for (int i = degree(); i >= 0; --i) acc = acc * z + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * scalar_from_int(c_[i], static_cast<int>(i)));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const Poly& hi = a.c_.size() >= b.c_.size() ? a : b;
        const Poly& lo = a.c_.size() >= b.c_.size() ? b : a;
        std::vector<T> s = hi.c_;
        for (std::size_t i = 0; i < lo.c_.size(); ++i) s[i] = s[i] + lo.c_[i];
        return Poly(std::move(s));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        std::vector<T> n;
        n.reserve(c_.size());
        for (const T& c : c_) n.push_back(-c);
        return Poly(std::move(n));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> p(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] = p[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(p));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> p;
        p.reserve(a.c_.size());
        for (const T& c : a.c_) p.push_back(c * s);
        return Poly(std::move(p));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    friend Poly operator+(const Poly& a, const T& s) { return a + Poly::constant(s); }

    /// Composition a(b(z)).
    Poly compose(const Poly& b) const {
        Poly acc;
        for (int i = degree(); i >= 0; --i)
            acc = acc * b + Poly::constant(c_[static_cast<std::size_t>(i)]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == zero_like(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// phi(z) = scale*z + shift with scale != 0; exact inversion and composition.
template <typename T>
struct AffineMap {
    T scale;
    T shift;

    AffineMap(T s, T b) : scale(std::move(s)), shift(std::move(b)) {
        if (scale == zero_like(scale)) throw std::invalid_argument("AffineMap: zero scale");
    }

    static AffineMap identity_like(const T& model) {
        return AffineMap(one_like(model), zero_like(model));
    }

    T apply(const T& z) const { return scale * z + shift; }

    AffineMap inverse() const {
        T inv = invert(scale);
        return AffineMap(inv, -(inv * shift));
    }

    /// this ∘ other: z -> this(other(z)).
    AffineMap compose(const AffineMap& other) const {
        return AffineMap(scale * other.scale, scale * other.shift + shift);
    }

    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.scale == b.scale && a.shift == b.shift;
    }
};

/// Affine conjugation f^phi = phi ∘ f ∘ phi^(-1). Degree is preserved and
/// critical points map through phi.
template <typename T>
Poly<T> conjugate(const Poly<T>& f, const AffineMap<T>& phi) {
    AffineMap<T> inv = phi.inverse();
    Poly<T> linear(std::vector<T>{inv.shift, inv.scale});
    return phi.scale * f.compose(linear) + Poly<T>::constant(phi.shift);
}

/// View a rational polynomial inside Q(sqrt(D)).
inline Poly<QuadExtElem> lift(const Poly<Rational>& f, const Int& d) {
    std::vector<QuadExtElem> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) c.push_back(QuadExtElem::from_rational(f.coeff(i), d));
    return Poly<QuadExtElem>(std::move(c));
}

/// Conjugation of a rational polynomial by a quadratic-field affine map.
inline Poly<QuadExtElem> conjugate(const Poly<Rational>& f, const AffineMap<QuadExtElem>& phi) {
    return conjugate(lift(f, phi.scale.d()), phi);
}

}  // namespace pcf
