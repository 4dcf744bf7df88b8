#pragma once

#include "pcf/absbound.hpp"
#include "pcf/normal_forms.hpp"
#include "pcf/place.hpp"
#include "pcf/poly.hpp"
#include "pcf/primes.hpp"
#include "pcf/quadext.hpp"

#include <set>
#include <tuple>
#include <vector>

namespace pcf {

enum class BoundProvenance { General, BelyiSpecialization, PcfConditional };

/**
 * An escape radius at one place: any orbit point of absolute value beyond the
 * threshold certifies a wandering orbit.
 */
struct EscapeBound {
    Place place;
    AbsBound threshold;
    BoundProvenance provenance = BoundProvenance::General;
};

/// The escape radius C_{f,v} = (2d)_v * max(1, |a_i/a_d|_v^(1/(d-i)),
/// |a_d|_v^(-1/(d-1))), where (2d)_v is 2d at the archimedean place and 1 at
/// finite places. Exact; fractional exponents live inside AbsBound.
inline EscapeBound c_f_nu(const Poly<Rational>& f, const Place& v) {
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("c_f_nu: degree >= 2 required");
    const Rational& lead = f.leading();
    AbsBound best{Rational(1)};
    for (int i = 0; i < d; ++i) {
        Rational ratio = abs_at(f.coeff(i) / lead, v);
        best = AbsBound::max(best, AbsBound::nth_root(ratio, static_cast<unsigned>(d - i)));
    }
    best = AbsBound::max(
        best, AbsBound::nth_root(Rational(1) / abs_at(lead, v), static_cast<unsigned>(d - 1)));
    if (v.is_archimedean()) best = best.scaled(Rational(2 * d));
    return EscapeBound{v, best, BoundProvenance::General};
}

/// C_{f,v} specialized to f = a(-2z^3+3z^2)+c:
/// (6)_v * max(1, |3/2|_v, |1/2a|_v^(1/2), |c/2a|_v^(1/3)).
inline EscapeBound belyi_c_f_nu(const Rational& a, const Rational& c, const Place& v) {
    if (a == 0) throw std::invalid_argument("belyi_c_f_nu: a must be nonzero");
    AbsBound best{Rational(1)};
    best = AbsBound::max(best, AbsBound(abs_at(Rational(3, 2), v)));
    best = AbsBound::max(best, AbsBound::nth_root(abs_at(Rational(1) / (2 * a), v), 2));
    best = AbsBound::max(best, AbsBound::nth_root(abs_at(c / (2 * a), v), 3));
    if (v.is_archimedean()) best = best.scaled(Rational(6));
    return EscapeBound{v, best, BoundProvenance::BelyiSpecialization};
}

/// The non-archimedean radius once f = a(-2z^3+3z^2)+c is assumed
/// post-critically bounded: the |c/2a|^(1/3) term is dominated and drops out.
inline EscapeBound belyi_pcf_c_f_nu(const Rational& a, const Place& v) {
    if (a == 0) throw std::invalid_argument("belyi_pcf_c_f_nu: a must be nonzero");
    if (v.is_archimedean()) throw std::invalid_argument("belyi_pcf_c_f_nu: finite places only");
    AbsBound best{Rational(1)};
    best = AbsBound::max(best, AbsBound(abs_at(Rational(3, 2), v)));
    best = AbsBound::max(best, AbsBound::nth_root(abs_at(Rational(1) / (2 * a), v), 2));
    return EscapeBound{v, best, BoundProvenance::PcfConditional};
}

/// True certifies that alpha is a wandering point of f: |alpha|_v > C_{f,v}.
inline bool escapes(const Poly<Rational>& f, const Rational& alpha, const Place& v) {
    return AbsBound(abs_at(alpha, v)).compare(c_f_nu(f, v).threshold) > 0;
}

/// Quadratic-point version. At finite places the coordinate-wise extension
/// quad_abs_max_at is compared against the radius; at p = 2 the comparison is
/// against 2*C to absorb the documented slack of the coordinate formula, so a
/// positive answer is still a genuine certificate.
inline bool escapes(const Poly<Rational>& f, const QuadExtElem& alpha, const Place& v) {
    EscapeBound b = c_f_nu(f, v);
    if (v.is_archimedean()) return arch_abs_exceeds(alpha, b.threshold);
    const Int& p = v.prime();
    AbsBound thr = (p == 2) ? b.threshold.scaled(Rational(2)) : b.threshold;
    return quad_abs_max_at(alpha, p) > thr;
}

/// The 126 pairs (a, c) with ±a in {1/2,...,7/2} and ±c in {0,...,2} that a
/// post-critically finite a(-2z^3+3z^2)+c must lie among. Deterministic order,
/// no duplicates (the sign of c = 0 collapses).
inline std::vector<BelyiParams> belyi_candidates() {
    static const int a_halves[] = {1, 2, 3, 4, 5, 6, 7};
    static const int c_halves[] = {0, 1, 2, 3, 4};
    std::vector<BelyiParams> out;
    out.reserve(126);
    for (int ah : a_halves)
        for (int sa : {1, -1})
            for (int ch : c_halves)
                for (int sc : {1, -1}) {
                    if (ch == 0 && sc < 0) continue;
                    out.push_back(BelyiParams{Rational(sa * ah, 2), Rational(sc * ch, 2)});
                }
    return out;
}

/// Exact check of the p-adic conditions |c*sqrt(a)|_p <= 1 (p >= 5),
/// 3^(-1/2) (p = 3), 2^3 (p = 2), cleared of square roots by comparing
/// v_p(c^2 a) against 0 / 1 / -6.
inline bool newton_polygon_filter(const Int& /*D*/, const Rational& a, const Rational& c) {
    Rational t = c * c * a;
    if (t == 0) return true;
    if (valuation(t, 2) < -6) return false;
    if (valuation(t, 3) < 1) return false;
    Int d = den(t);
    while (d % 2 == 0) d /= 2;
    while (d % 3 == 0) d /= 3;
    return d == 1;
}

/// How a candidate triple was produced: D = m*P or 2*m*P, a = aD/D,
/// c = P*k/2^e.
struct CandidateTrace {
    Rational aD;
    Int m;
    Int P;
    long k = 0;
    int e = 0;
};

struct CandidateTriple {
    Int D;
    Rational a;
    Rational c;
    CandidateTrace trace;
};

struct IrrationalSpace {
    // deduplicated triples with D != 1, in first-emission order, each with the
    // trace that first produced it
    std::vector<CandidateTriple> triples;
    // every emission of the generating loops, counting duplicate derivations
    // and D = 1 rows; this is the count the enumeration is calibrated against
    long raw_count = 0;
    long raw_polynomial_count = 0;  // 4 * raw_count (sign variants of D and a)
    long unique_count = 0;          // distinct triples including D = 1
    long d1_count = 0;              // distinct D = 1 triples (rational critical points)
};

/**
 * The finite search space for a(z^3/3 - Dz) + c with irrational critical
 * points, as positive triples (D, a, c); every post-critically finite such
 * map is one of the four sign variants (±D, ±a, c) of a listed triple.
 *
 * For each admissible |aD| and parity of D: e is the largest integer with
 * 2^(2e) <= 64/|a|_2; m runs over squarefree divisors of num(aD); P over odd
 * squarefree integers coprime to m; c = P*k/2^e with P*k^2 <= B for
 * B = 11*m*4^e (D odd) or 22*m*4^e (D even); the triple survives iff
 * v_3(a*c) >= 1. The boundary P*k^2 = B is kept (conservative) and raw
 * emissions are tallied before deduplication — this is the convention that
 * reproduces the calibrated counts of 5957 rows / 23828 polynomials.
 */
inline IrrationalSpace irrational_candidates() {
    static const Rational kAdValues[] = {Rational(3, 4),  Rational(3, 2), Rational(9, 4),
                                         Rational(3),     Rational(15, 4), Rational(9, 2),
                                         Rational(21, 4)};
    IrrationalSpace space;
    std::set<std::tuple<Int, Rational, Rational>> seen;
    std::set<std::tuple<Int, Rational, Rational>> seen_d1;
    for (const Rational& aD : kAdValues) {
        const Int n_ad = num(aD);
        for (bool d_even : {false, true}) {
            long v2a = valuation(aD, 2) - (d_even ? 1 : 0);
            int e = static_cast<int>((6 + v2a) / 2);  // 6 + v2a >= 3 here
            Int two_e = pow_int(Int(2), static_cast<unsigned>(e));
            for (const Int& m : squarefree_divisors(n_ad)) {
                Int bound = Int(11) * m * two_e * two_e * (d_even ? 2 : 1);
                for (Int P = 1; P < bound; P += 2) {
                    if (!is_squarefree(P) || gcd(P, m) != 1) continue;
                    for (long k = 1; P * k * k <= bound; ++k) {
                        Int D = m * P * (d_even ? 2 : 1);
                        Rational a = aD / Rational(D);
                        Rational c(P * k, two_e);
                        if (valuation(a * c, 3) < 1) continue;
                        ++space.raw_count;
                        if (D == 1) {
                            seen_d1.emplace(D, a, c);
                            continue;  // rational critical points; handled by the Belyi case
                        }
                        if (seen.emplace(D, a, c).second) {
                            CandidateTrace trace{aD, m, P, k, e};
                            space.triples.push_back(CandidateTriple{D, a, c, trace});
                        }
                    }
                }
            }
        }
    }
    space.raw_polynomial_count = 4 * space.raw_count;
    space.d1_count = static_cast<long>(seen_d1.size());
    space.unique_count = static_cast<long>(seen.size()) + space.d1_count;
    return space;
}

}  // namespace pcf
