#pragma once

#include "pcf/numeric.hpp"
#include "pcf/poly.hpp"
#include "pcf/primes.hpp"
#include "pcf/quadext.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

/**
 * The degree-d bicritical polynomial fixing its two critical points 0 and 1,
 * with ramification d-k at 0 and k+1 at 1:
 * B'(z) = const * z^(d-k-1) (z-1)^k, B(0) = 0, B(1) = 1.
 */
inline Poly<Rational> belyi_poly(int d, int k) {
    if (d < 3) throw std::invalid_argument("belyi_poly: degree must be >= 3");
    if (k < 1 || k >= d - 1) throw std::invalid_argument("belyi_poly: k out of range [1, d-2]");
    Rational pref(1);
    for (int j = 0; j <= k; ++j) pref *= Rational(d - j);
    for (int j = 2; j <= k; ++j) pref /= Rational(j);
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    Int binom = 1;
    for (int i = 0; i <= k; ++i) {
        if (i > 0) binom = binom * (k - i + 1) / i;
        Rational term = pref * Rational((i % 2 == 0) ? binom : -binom) / Rational(d - k + i);
        coeffs[static_cast<std::size_t>(d - k + i)] = term;
    }
    return Poly<Rational>(std::move(coeffs));
}

/**
 * The odd-degree bicritical polynomial with critical points ±sqrt(D):
 * P'(z) = (z^2 - D)^((d-1)/2), P(0) = 0.
 */
inline Poly<Rational> p_poly(int d, const Int& D) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("p_poly: degree must be odd and >= 3");
    int h = (d - 1) / 2;
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    Int binom = 1;
    for (int j = 0; j <= h; ++j) {
        if (j > 0) binom = binom * (h - j + 1) / j;
        coeffs[static_cast<std::size_t>(2 * j + 1)] =
            Rational(pow_int(-D, static_cast<unsigned>(h - j)) * binom, 2 * j + 1);
    }
    return Poly<Rational>(std::move(coeffs));
}

/// f_{a,c}(z) = a(-2z^3 + 3z^2) + c.
struct BelyiParams {
    Rational a;
    Rational c;

    friend bool operator==(const BelyiParams& p, const BelyiParams& q) {
        return p.a == q.a && p.c == q.c;
    }
    friend bool operator<(const BelyiParams& p, const BelyiParams& q) {
        if (p.a != q.a) return p.a < q.a;
        return p.c < q.c;
    }
};

/// f_{D,a,c}(z) = a(z^3/3 - Dz) + c with D squarefree, not 0 or 1.
struct IrratParams {
    Int D;
    Rational a;
    Rational c;

    friend bool operator==(const IrratParams& p, const IrratParams& q) {
        return p.D == q.D && p.a == q.a && p.c == q.c;
    }
    friend bool operator<(const IrratParams& p, const IrratParams& q) {
        if (p.D != q.D) return p.D < q.D;
        if (p.a != q.a) return p.a < q.a;
        return p.c < q.c;
    }
};

inline Poly<Rational> belyi_family(const Rational& a, const Rational& c) {
    if (a == 0) throw std::invalid_argument("belyi_family: a must be nonzero");
    return a * belyi_poly(3, 1) + Poly<Rational>::constant(c);
}
inline Poly<Rational> belyi_family(const BelyiParams& p) { return belyi_family(p.a, p.c); }

inline Poly<Rational> irrational_family(const Int& D, const Rational& a, const Rational& c) {
    if (a == 0) throw std::invalid_argument("irrational_family: a must be nonzero");
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw std::invalid_argument("irrational_family: D must be squarefree, not 0 or 1");
    return a * p_poly(3, D) + Poly<Rational>::constant(c);
}
inline Poly<Rational> irrational_family(const IrratParams& p) {
    return irrational_family(p.D, p.a, p.c);
}

/// Conjugating f_{a,c} by z -> 1-z swaps the critical points and yields
/// f_{a,1-a-c}; parameter pairs are classified up to this involution.
inline BelyiParams belyi_swap(const BelyiParams& p) {
    return BelyiParams{p.a, Rational(1) - p.a - p.c};
}

/// The lexicographically smaller of the pair and its swap partner.
inline BelyiParams belyi_canonical(const BelyiParams& p) {
    BelyiParams q = belyi_swap(p);
    return q < p ? q : p;
}

enum class CriticalCase { RationalPair, IrrationalPair, Unicritical };

/**
 * The critical points of a cubic, in one of three shapes: two distinct
 * rational points, a conjugate pair m ± n*sqrt(D) over a quadratic extension,
 * or a single rational double root of f'.
 */
struct CriticalData {
    CriticalCase kind = CriticalCase::Unicritical;

    Rational gamma1, gamma2;  // RationalPair, gamma1 < gamma2
    Rational m, n;            // IrrationalPair: points m ± n*sqrt(D), n > 0
    Int D;                    //   D squarefree with the sign of disc(f')
    Rational gamma;           // Unicritical double root

    std::vector<Rational> rational_points() const {
        switch (kind) {
            case CriticalCase::RationalPair: return {gamma1, gamma2};
            case CriticalCase::Unicritical: return {gamma};
            default: throw std::logic_error("rational_points: critical points are irrational");
        }
    }

    std::pair<QuadExtElem, QuadExtElem> quad_points() const {
        if (kind != CriticalCase::IrrationalPair)
            throw std::logic_error("quad_points: critical points are rational");
        return {QuadExtElem(m, n, D), QuadExtElem(m, -n, D)};
    }

    std::vector<int> multiplicities() const {
        return kind == CriticalCase::Unicritical ? std::vector<int>{2} : std::vector<int>{1, 1};
    }
};

/// Classify the critical points of a cubic via the discriminant of f'.
inline CriticalData classify_critical(const Poly<Rational>& f) {
    if (f.degree() != 3) throw std::invalid_argument("classify_critical: cubic required");
    Poly<Rational> fp = f.derivative();
    Rational A = fp.coeff(2), B = fp.coeff(1), C = fp.coeff(0);
    Rational disc = B * B - 4 * A * C;
    CriticalData out;
    if (disc == 0) {
        // a double irrational root is impossible over Q: the root -B/2A is rational
        out.kind = CriticalCase::Unicritical;
        out.gamma = -B / (2 * A);
        return out;
    }
    if (auto s = rational_sqrt(disc)) {
        Rational r1 = (-B - *s) / (2 * A);
        Rational r2 = (-B + *s) / (2 * A);
        if (r2 < r1) std::swap(r1, r2);
        out.kind = CriticalCase::RationalPair;
        out.gamma1 = r1;
        out.gamma2 = r2;
        return out;
    }
    // disc = (t/q)^2 * D with D its signed squarefree kernel
    Int p = num(disc), q = den(disc);
    Int D = squarefree_kernel(p * q);
    Int t;
    is_perfect_square((p * q) / D, t);
    out.kind = CriticalCase::IrrationalPair;
    out.m = -B / (2 * A);
    out.n = abs(Rational(t, q) / (2 * A));
    out.D = D;
    return out;
}

/// Result of normalizing a unicritical polynomial: either conjugate to z^d,
/// or to a*z^d + 1 for the unique listed a.
struct UnicriticalForm {
    bool power_map = false;
    Rational a;  // meaningful when !power_map
};

/**
 * Normalize a unicritical polynomial whose (rational) critical point has full
 * multiplicity: shift it to 0 giving b*z^d + c, then either c = 0 (a power
 * map up to scaling) or a = b*c^(d-1) in the normal form a*z^d + 1.
 */
inline UnicriticalForm unicritical_normalize(const Poly<Rational>& f) {
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("unicritical_normalize: degree >= 2 required");
    Rational gamma = -f.coeff(d - 1) / (Rational(d) * f.leading());
    Poly<Rational> g = conjugate(f, AffineMap<Rational>(Rational(1), -gamma));
    for (int i = 1; i < d; ++i)
        if (g.coeff(i) != 0)
            throw std::invalid_argument("unicritical_normalize: polynomial is not unicritical");
    Rational b = g.leading(), c = g.coeff(0);
    if (c == 0) return UnicriticalForm{true, Rational(0)};
    return UnicriticalForm{false, b * pow_rational(c, d - 1)};
}

namespace detail {
inline BelyiParams belyi_extract(const Poly<Rational>& f, const Rational& g1, const Rational& g2) {
    // phi(z) = (z - g1)/(g2 - g1) sends g1, g2 to 0, 1
    Rational s = Rational(1) / (g2 - g1);
    Poly<Rational> g = conjugate(f, AffineMap<Rational>(s, -g1 * s));
    BelyiParams p{-g.coeff(3) / 2, g.coeff(0)};
    if (g != belyi_family(p))
        throw std::logic_error("belyi_normalize: nonzero residual against the normal form");
    return p;
}
}  // namespace detail

/**
 * Normal form for a cubic with two rational critical points: the unique
 * (a, c) with f conjugate to a(-2z^3+3z^2)+c, canonicalized across the two
 * orientations of the critical points by taking the lexicographically
 * smaller parameter pair.
 */
inline BelyiParams belyi_normalize(const Poly<Rational>& f) {
    CriticalData cd = classify_critical(f);
    if (cd.kind != CriticalCase::RationalPair)
        throw std::invalid_argument("belyi_normalize: two rational critical points required");
    BelyiParams p1 = detail::belyi_extract(f, cd.gamma1, cd.gamma2);
    BelyiParams p2 = detail::belyi_extract(f, cd.gamma2, cd.gamma1);
    return p2 < p1 ? p2 : p1;
}

/**
 * Normal form for a cubic with critical points m ± n*sqrt(D): the (D, a, c)
 * with f conjugate to a(z^3/3 - Dz) + c via the rational map (z - m)/n.
 * D carries the sign of disc(f') and n > 0.
 */
inline IrratParams irrational_normalize(const Poly<Rational>& f) {
    CriticalData cd = classify_critical(f);
    if (cd.kind != CriticalCase::IrrationalPair)
        throw std::invalid_argument("irrational_normalize: irrational critical points required");
    Rational s = Rational(1) / cd.n;
    Poly<Rational> g = conjugate(f, AffineMap<Rational>(s, -cd.m * s));
    IrratParams p{cd.D, 3 * g.coeff(3), g.coeff(0)};
    if (g != irrational_family(p))
        throw std::logic_error("irrational_normalize: nonzero residual against the normal form");
    return p;
}

/**
 * The monic centered data of a cubic: center to kill the z^2 term, giving
 * a3*z^3 + p*z + q, then scale by lambda with lambda^2 = a3 to reach
 * z^3 + A*z + B. A = p is rational; B = lambda*q generally is not, so the
 * pair (A, B^2) = (p, a3*q^2) is returned over Q and B itself only when it
 * exists there (taken >= 0; z -> -z flips its sign within the class).
 */
struct MonicCentered {
    Rational A;
    Rational B_squared;
    std::optional<Rational> B;
};

inline MonicCentered monic_centered(const Poly<Rational>& f) {
    if (f.degree() != 3) throw std::invalid_argument("monic_centered: cubic required");
    const Rational& a3 = f.leading();
    Rational t = -f.coeff(2) / (3 * a3);
    Poly<Rational> g = conjugate(f, AffineMap<Rational>(Rational(1), -t));
    if (g.coeff(2) != 0) throw std::logic_error("monic_centered: centering failed");
    Rational p = g.coeff(1), q = g.coeff(0);
    MonicCentered out{p, a3 * q * q, std::nullopt};
    if (q == 0)
        out.B = Rational(0);
    else if (auto r = rational_sqrt(out.B_squared))
        out.B = *r;
    return out;
}

/**
 * The pair (A, B^2) of the monic centered form. Affine conjugation cannot
 * change it, and two cubics over Q sharing it are conjugate over the
 * algebraic closure: the only monic-centered-preserving conjugations are
 * z -> ±z, which flip the sign of B.
 */
struct ConjInvariant {
    Rational A;
    Rational B_squared;

    friend bool operator==(const ConjInvariant& u, const ConjInvariant& v) {
        return u.A == v.A && u.B_squared == v.B_squared;
    }
    friend bool operator!=(const ConjInvariant& u, const ConjInvariant& v) { return !(u == v); }
    friend bool operator<(const ConjInvariant& u, const ConjInvariant& v) {
        if (u.A != v.A) return u.A < v.A;
        return u.B_squared < v.B_squared;
    }

    std::string str() const { return "(" + to_string(A) + ", " + to_string(B_squared) + ")"; }
};

inline ConjInvariant conjugacy_invariant(const Poly<Rational>& f) {
    MonicCentered mc = monic_centered(f);
    return ConjInvariant{mc.A, mc.B_squared};
}

}  // namespace pcf
