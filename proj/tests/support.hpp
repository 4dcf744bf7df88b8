// Test-only oracles and generators. Everything here decides questions by a
// route independent of the library path it is used to check.
#pragma once

#include "pcf/bounds.hpp"
#include "pcf/certify.hpp"
#include "pcf/normal_forms.hpp"
#include "pcf/poly.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace pcftest {

using namespace pcf;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(std::mt19937_64& rng, long height) {
    return Rational(rand_long(rng, -height, height), rand_long(rng, 1, height));
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, long height) {
    for (;;) {
        Rational q = rand_rational(rng, height);
        if (q != 0) return q;
    }
}

inline Int rand_prime(std::mt19937_64& rng) {
    static const int pool[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 101, 997};
    return Int(pool[rand_long(rng, 0, std::size(pool) - 1)]);
}

inline Int rand_odd_prime(std::mt19937_64& rng) {
    for (;;) {
        Int p = rand_prime(rng);
        if (p != 2) return p;
    }
}

inline Int rand_squarefree_d(std::mt19937_64& rng, long bound) {
    for (;;) {
        long d = rand_long(rng, -bound, bound);
        if (d != 0 && d != 1 && is_squarefree(Int(d))) return Int(d);
    }
}

inline Poly<Rational> rand_cubic(std::mt19937_64& rng, long height) {
    for (;;) {
        Poly<Rational> f{rand_rational(rng, height), rand_rational(rng, height),
                         rand_rational(rng, height), rand_rational(rng, height)};
        if (f.degree() == 3) return f;
    }
}

inline AffineMap<Rational> rand_affine(std::mt19937_64& rng, long height) {
    return AffineMap<Rational>(rand_nonzero_rational(rng, height), rand_rational(rng, height));
}

// ---------------------------------------------------------------------------
// Belyi polynomial by direct construction: integrate z^(d-k-1) (z-1)^k
// term-by-term and scale so that B(1) = 1.
inline Poly<Rational> belyi_by_integration(int d, int k) {
    // (z-1)^k expanded
    std::vector<Rational> binpow(static_cast<std::size_t>(k) + 1, Rational(0));
    Int binom = 1;
    for (int i = 0; i <= k; ++i) {
        if (i > 0) binom = binom * (k - i + 1) / i;
        binpow[static_cast<std::size_t>(i)] = Rational(((k - i) % 2 == 0) ? binom : -binom);
    }
    // times z^(d-k-1), integrated
    std::vector<Rational> integ(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int i = 0; i <= k; ++i) {
        int power = d - k - 1 + i;  // before integration
        integ[static_cast<std::size_t>(power) + 1] = binpow[static_cast<std::size_t>(i)] / (power + 1);
    }
    Poly<Rational> raw{integ};
    Rational at_one = raw.eval(Rational(1));
    if (at_one == 0) throw std::logic_error("belyi_by_integration: vanishing normalization");
    return raw * (Rational(1) / at_one);
}

// Exact polynomial division; returns false if the remainder is nonzero.
inline bool poly_divides(const Poly<Rational>& divisor, const Poly<Rational>& dividend,
                         Poly<Rational>* quotient = nullptr) {
    if (divisor.is_zero()) return dividend.is_zero();
    Poly<Rational> rem = dividend;
    std::vector<Rational> q(static_cast<std::size_t>(
                                std::max(0, dividend.degree() - divisor.degree() + 1)),
                            Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / divisor.leading();
        std::vector<Rational> mono(static_cast<std::size_t>(shift) + 1, Rational(0));
        mono.back() = factor;
        q[static_cast<std::size_t>(shift)] = factor;
        rem = rem - divisor * Poly<Rational>(mono);
    }
    if (!rem.is_zero()) return false;
    if (quotient) *quotient = Poly<Rational>(q);
    return true;
}

// ---------------------------------------------------------------------------
// Hensel lifting oracle: a square root of D modulo p^prec for odd p with
// p not dividing D and D a quadratic residue mod p. Returns 0 if D is a
// non-residue.
inline Int hensel_sqrt(const Int& D, const Int& p, unsigned prec) {
    Int d0 = ((D % p) + p) % p;
    Int s0 = 0;
    for (Int r = 0; r < p; ++r) {
        if ((r * r) % p == d0) {
            s0 = r;
            break;
        }
    }
    if (s0 == 0 && d0 != 0) return 0;  // non-residue
    Int modulus = p;
    Int target = pow_int(p, prec);
    Int s = s0;
    while (modulus < target) {
        modulus = modulus * modulus;
        if (modulus > target) modulus = target;
        // Newton step s <- s - (s^2 - D) / (2s) mod modulus
        Int num = ((s * s - D) % modulus + modulus) % modulus;
        // inverse of 2s mod modulus via extended gcd
        Int a = ((2 * s) % modulus + modulus) % modulus, b = modulus;
        Int x0 = 1, x1 = 0;
        while (b != 0) {
            Int qt = a / b;
            Int t = a - qt * b;
            a = b;
            b = t;
            t = x0 - qt * x1;
            x0 = x1;
            x1 = t;
        }
        if (a != 1) throw std::logic_error("hensel_sqrt: 2s not invertible");
        Int inv = ((x0 % modulus) + modulus) % modulus;
        s = ((s - num * inv) % modulus + modulus) % modulus;
    }
    return s;
}

// |x + y*s|_p for the embedding sqrt(D) -> s (s a unit square root mod p^prec).
// Exact for points whose valuation is far below the precision.
inline AbsBound embedding_abs(const QuadExtElem& xi, const Int& p, const Int& s, unsigned prec) {
    Int modulus = pow_int(p, prec);
    Int lcm_den = boost::multiprecision::lcm(den(xi.x()), den(xi.y()));
    Int xn = num(xi.x()) * (lcm_den / den(xi.x()));
    Int yn = num(xi.y()) * (lcm_den / den(xi.y()));
    Int emb = ((xn + yn * s) % modulus + modulus) % modulus;
    long vden = valuation_int(lcm_den, p);
    if (emb == 0) {
        // valuation at or beyond precision: flag by an over-large magnitude
        throw std::logic_error("embedding_abs: precision exhausted");
    }
    long vnum = valuation_int(emb, p);
    if (vnum >= static_cast<long>(prec) - 2) throw std::logic_error("embedding_abs: precision exhausted");
    long v = vnum - vden;
    Rational mag = v >= 0 ? Rational(1, pow_int(p, static_cast<unsigned>(v)))
                          : Rational(pow_int(p, static_cast<unsigned>(-v)));
    return AbsBound(mag);
}

// ---------------------------------------------------------------------------
// Naive iterate-and-hash orbit oracle. No p-adic certificates: it detects a
// repeat, or declares wandering when the orbit leaves the crude archimedean
// radius max(4, 2*C_inf) or its representation outgrows a bit cap (a
// preperiodic orbit has bounded representation, while any unbounded p-adic
// growth shows up as denominator growth).
inline std::size_t bit_size(const Rational& q) {
    std::size_t bits = 0;
    if (num(q) != 0) bits += boost::multiprecision::msb(abs(num(q))) + 1;
    bits += boost::multiprecision::msb(den(q)) + 1;
    return bits;
}

struct NaiveOptions {
    long step_cap = 10000;
    std::size_t bit_cap = 4096;
};

inline bool naive_preperiodic(const Poly<Rational>& f, const Rational& start,
                              const NaiveOptions& opt = {}) {
    AbsBound radius = AbsBound::max(AbsBound(Rational(4)),
                                    c_f_nu(f, Place::archimedean()).threshold.scaled(Rational(2)));
    std::set<Rational> seen;
    Rational x = start;
    for (long n = 0; n <= opt.step_cap; ++n) {
        if (seen.count(x)) return true;
        seen.insert(x);
        if (AbsBound(abs(x)).compare(radius) > 0) return false;
        if (bit_size(x) > opt.bit_cap) return false;
        x = f.eval(x);
    }
    throw std::runtime_error("naive_preperiodic: step cap exceeded");
}

// sign of (x + y*sqrt(d)) for d > 0, implemented locally so the oracle does
// not share the library's comparison code
inline int naive_sign(const Rational& x, const Rational& y, const Int& d) {
    int sx = sign(x), sy = sign(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    return x * x > Rational(d) * y * y ? sx : sy;
}

inline bool naive_embedding_exceeds(const QuadExtElem& z, const Rational& radius) {
    if (z.d() < 0) return z.x() * z.x() - Rational(z.d()) * z.y() * z.y() > radius * radius;
    auto above = [&](const Rational& x, const Rational& y) {
        return naive_sign(x - radius, y, z.d()) > 0 || naive_sign(x + radius, y, z.d()) < 0;
    };
    return above(z.x(), z.y()) || above(z.x(), -z.y());
}

inline bool naive_preperiodic(const Poly<Rational>& f, const QuadExtElem& start,
                              const NaiveOptions& opt = {}) {
    // crude rational over-estimate of max(4, 2*C_inf): 2 * (base + 1) covers
    // base^(1/root) for base >= 0, root >= 1
    AbsBound c = c_f_nu(f, Place::archimedean()).threshold;
    Rational radius = 2 * (c.base() + 1) + 4;
    std::set<QuadExtElem> seen;
    QuadExtElem x = start;
    for (long n = 0; n <= opt.step_cap; ++n) {
        if (seen.count(x)) return true;
        seen.insert(x);
        if (naive_embedding_exceeds(x, radius)) return false;
        if (bit_size(x.x()) + bit_size(x.y()) > opt.bit_cap) return false;
        x = f.eval(x);
    }
    throw std::runtime_error("naive_preperiodic: step cap exceeded");
}

inline bool naive_is_pcf(const Poly<Rational>& f, const NaiveOptions& opt = {}) {
    CriticalData cd = classify_critical(f);
    if (cd.kind == CriticalCase::IrrationalPair) {
        auto [g1, g2] = cd.quad_points();
        return naive_preperiodic(f, g1, opt) && naive_preperiodic(f, g2, opt);
    }
    for (const Rational& g : cd.rational_points())
        if (!naive_preperiodic(f, g, opt)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certificate replay: re-derive every claim of an OrbitResult from scratch.
inline std::vector<Int> replay_bad_primes(const Poly<Rational>& f, const Int& quad_d) {
    std::set<Int> primes{Int(2), Int(3)};
    for (const Rational& c : f.coeffs())
        for (const Int& p : support(c)) primes.insert(p);
    if (quad_d != 0)
        for (const auto& [p, e] : factor(abs(quad_d))) primes.insert(p);
    return {primes.begin(), primes.end()};
}

inline bool replay_integrality(const Rational& q, const std::vector<Int>& bad) {
    Int d = den(q);
    for (const Int& p : bad)
        while (d % p == 0) d /= p;
    return d != 1;
}

template <typename A>
bool replay_orbit_result(const Poly<Rational>& f, const A& start, const OrbitResult<A>& r) {
    Int quad_d = 0;
    if constexpr (std::is_same_v<A, QuadExtElem>) quad_d = start.d();
    if (r.preperiodic) {
        if (r.period <= 0 || r.tail < 0) return false;
        if (static_cast<long>(r.points.size()) != r.tail + r.period) return false;
        A x = start;
        for (long i = 0; i < r.tail + r.period; ++i) {
            if (!(x == r.points[static_cast<std::size_t>(i)])) return false;
            x = f.eval(x);
        }
        // the defining repeat, then minimality by direct scan
        if (!(x == r.points[static_cast<std::size_t>(r.tail)])) return false;
        for (std::size_t i = 0; i < r.points.size(); ++i)
            for (std::size_t j = i + 1; j < r.points.size(); ++j)
                if (r.points[i] == r.points[j]) return false;
        return true;
    }
    if (r.points.empty() || r.witness.iterate + 1 != static_cast<long>(r.points.size()))
        return false;
    A x = start;
    for (long i = 0; i < r.witness.iterate; ++i) x = f.eval(x);
    if (!(x == r.points.back())) return false;
    if (r.witness.kind == WitnessKind::AtPlace) return escapes(f, x, r.witness.place);
    std::vector<Int> bad = replay_bad_primes(f, quad_d);
    if constexpr (std::is_same_v<A, QuadExtElem>)
        return replay_integrality(x.x(), bad) || replay_integrality(x.y(), bad);
    else
        return replay_integrality(x, bad);
}

}  // namespace pcftest
