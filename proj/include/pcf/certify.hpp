#pragma once

#include "pcf/bounds.hpp"
#include "pcf/normal_forms.hpp"
#include "pcf/poly.hpp"

#include <optional>
#include <set>
#include <unordered_map>
#include <variant>
#include <vector>

namespace pcf {

template <typename A>
struct PointHash;
template <>
struct PointHash<Rational> : RationalHash {};
template <>
struct PointHash<QuadExtElem> : QuadExtHash {};

enum class WitnessKind { AtPlace, Integrality };

/// A replayable wandering certificate: at iterate n the orbit point exceeds
/// C_{f,v} at the named place, or has a prime outside the bad-prime set in a
/// coordinate denominator (so it exceeds C_{f,p} = 1 there).
struct WanderingWitness {
    WitnessKind kind = WitnessKind::AtPlace;
    Place place;
    long iterate = 0;
};

template <typename A>
struct OrbitResult {
    bool preperiodic = false;
    long tail = 0;    // minimal, when preperiodic
    long period = 0;  // minimal, when preperiodic
    // preperiodic: exactly the tail + period orbit points, in orbit order;
    // wandering: the trajectory up to and including the witness iterate
    std::vector<A> points;
    WanderingWitness witness;  // meaningful when !preperiodic
};

/**
 * Certified orbit computation for one polynomial.
 *
 * Precomputes the escape radii C_{f,v} at the archimedean place and at every
 * bad prime (primes of the coefficients, 2 and 3, and the primes of D when
 * orbits live in Q(sqrt(D))). Each orbit point is tested against three
 * certificates: archimedean escape, p-adic escape at bad primes, and a prime
 * outside the bad set appearing in a denominator. Points passing all three
 * form a finite set, so either a certificate fires or an exact repeat occurs;
 * the iteration cap is a pure bug guard.
 */
class OrbitCertifier {
public:
    explicit OrbitCertifier(Poly<Rational> f, Int quad_d = Int(0)) : f_(std::move(f)) {
        if (f_.degree() < 2) throw std::invalid_argument("OrbitCertifier: degree >= 2 required");
        std::set<Int> primes{Int(2), Int(3)};
        for (const Rational& coeff : f_.coeffs())
            for (const Int& p : support(coeff)) primes.insert(p);
        if (quad_d != 0)
            for (const auto& [p, e] : factor(abs(quad_d))) primes.insert(p);
        arch_bound_ = c_f_nu(f_, Place::archimedean()).threshold;
        for (const Int& p : primes) {
            bad_primes_.push_back(p);
            finite_bounds_.push_back(c_f_nu(f_, Place::finite(p)).threshold);
        }
    }

    const Poly<Rational>& poly() const { return f_; }
    const std::vector<Int>& bad_primes() const { return bad_primes_; }
    const AbsBound& arch_bound() const { return arch_bound_; }

    template <typename A>
    OrbitResult<A> run(const A& start, long max_iter = 1000000) const {
        std::unordered_map<A, long, PointHash<A>> first_index;
        std::vector<A> points;
        A x = start;
        for (long n = 0; n <= max_iter; ++n) {
            auto it = first_index.find(x);
            if (it != first_index.end()) {
                OrbitResult<A> r;
                r.preperiodic = true;
                r.tail = it->second;
                r.period = n - it->second;
                r.points = std::move(points);
                return r;
            }
            if (auto w = wandering_certificate(x, n)) {
                OrbitResult<A> r;
                r.preperiodic = false;
                points.push_back(x);
                r.points = std::move(points);
                r.witness = *w;
                return r;
            }
            first_index.emplace(x, n);
            points.push_back(x);
            x = f_.eval(x);
        }
        throw std::runtime_error("OrbitCertifier: iteration cap exceeded (internal guard)");
    }

    /// Denominator with all bad primes divided out; 1 means S-integral.
    Int strip_bad_primes(Int d) const {
        for (const Int& p : bad_primes_)
            while (d % p == 0) d /= p;
        return d;
    }

private:
    std::optional<WanderingWitness> wandering_certificate(const Rational& x, long n) const {
        if (AbsBound(abs(x)) > arch_bound_) return WanderingWitness{WitnessKind::AtPlace, Place::archimedean(), n};
        for (std::size_t i = 0; i < bad_primes_.size(); ++i) {
            if (AbsBound(abs_at(x, Place::finite(bad_primes_[i]))) > finite_bounds_[i])
                return WanderingWitness{WitnessKind::AtPlace, Place::finite(bad_primes_[i]), n};
        }
        if (strip_bad_primes(den(x)) != 1)
            return WanderingWitness{WitnessKind::Integrality, Place::archimedean(), n};
        return std::nullopt;
    }

    std::optional<WanderingWitness> wandering_certificate(const QuadExtElem& x, long n) const {
        if (arch_abs_exceeds(x, arch_bound_))
            return WanderingWitness{WitnessKind::AtPlace, Place::archimedean(), n};
        for (std::size_t i = 0; i < bad_primes_.size(); ++i) {
            const Int& p = bad_primes_[i];
            // slack factor 2 at p = 2 keeps the coordinate-wise certificate sound
            AbsBound thr = (p == 2) ? finite_bounds_[i].scaled(Rational(2)) : finite_bounds_[i];
            if (quad_abs_max_at(x, p) > thr)
                return WanderingWitness{WitnessKind::AtPlace, Place::finite(p), n};
        }
        if (strip_bad_primes(den(x.x())) != 1 || strip_bad_primes(den(x.y())) != 1)
            return WanderingWitness{WitnessKind::Integrality, Place::archimedean(), n};
        return std::nullopt;
    }

    Poly<Rational> f_;
    std::vector<Int> bad_primes_;
    std::vector<AbsBound> finite_bounds_;
    AbsBound arch_bound_;
};

/// Decide one orbit with certificates; convenience wrapper over the certifier.
template <typename A>
OrbitResult<A> orbit(const Poly<Rational>& f, const A& start, long max_iter = 1000000) {
    if constexpr (std::is_same_v<A, QuadExtElem>)
        return OrbitCertifier(f, start.d()).run(start, max_iter);
    else
        return OrbitCertifier(f).run(start, max_iter);
}

/// Certified PCF decision for a cubic, with the per-critical-point orbits.
struct PcfAnalysis {
    bool pcf = false;
    CriticalData crit;
    std::vector<OrbitResult<Rational>> rational_orbits;  // cases (a) and (c)
    std::vector<OrbitResult<QuadExtElem>> quad_orbits;   // case (b)
};

inline PcfAnalysis is_pcf(const Poly<Rational>& f, long max_iter = 1000000) {
    PcfAnalysis out;
    out.crit = classify_critical(f);
    if (out.crit.kind == CriticalCase::IrrationalPair) {
        OrbitCertifier cert(f, out.crit.D);
        auto [g1, g2] = out.crit.quad_points();
        out.quad_orbits.push_back(cert.run(g1, max_iter));
        out.quad_orbits.push_back(cert.run(g2, max_iter));
        out.pcf = out.quad_orbits[0].preperiodic && out.quad_orbits[1].preperiodic;
    } else {
        OrbitCertifier cert(f);
        out.pcf = true;
        for (const Rational& g : out.crit.rational_points()) {
            out.rational_orbits.push_back(cert.run(g, max_iter));
            out.pcf = out.pcf && out.rational_orbits.back().preperiodic;
        }
    }
    return out;
}

/**
 * Functional graph of the union of the critical orbits of a PCF polynomial.
 * Nodes are exact points in discovery order (first critical orbit first);
 * every node has out-degree one.
 */
template <typename A>
struct Portrait {
    std::vector<A> nodes;
    std::vector<std::size_t> next;      // next[i] = index of f(nodes[i])
    std::vector<std::size_t> critical;  // node indexes of the critical points
    std::vector<std::pair<long, long>> tails_periods;  // per critical point
};

namespace detail {
template <typename A>
Portrait<A> build_portrait(const Poly<Rational>& f, const std::vector<A>& crit_points,
                           const std::vector<OrbitResult<A>>& orbits) {
    Portrait<A> g;
    std::unordered_map<A, std::size_t, PointHash<A>> index;
    for (const auto& r : orbits)
        for (const A& pt : r.points)
            if (index.emplace(pt, g.nodes.size()).second) g.nodes.push_back(pt);
    g.next.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        A image = f.eval(g.nodes[i]);
        auto it = index.find(image);
        if (it == index.end()) throw std::logic_error("portrait: orbit set not forward-closed");
        g.next[i] = it->second;
    }
    for (std::size_t k = 0; k < crit_points.size(); ++k) {
        g.critical.push_back(index.at(crit_points[k]));
        g.tails_periods.emplace_back(orbits[k].tail, orbits[k].period);
    }
    return g;
}
}  // namespace detail

using AnyPortrait = std::variant<Portrait<Rational>, Portrait<QuadExtElem>>;

/// Throws std::domain_error when f is not PCF.
inline AnyPortrait portrait(const Poly<Rational>& f, long max_iter = 1000000) {
    PcfAnalysis an = is_pcf(f, max_iter);
    if (!an.pcf) throw std::domain_error("portrait: polynomial is not post-critically finite");
    if (an.crit.kind == CriticalCase::IrrationalPair) {
        auto [g1, g2] = an.crit.quad_points();
        return detail::build_portrait(f, std::vector<QuadExtElem>{g1, g2}, an.quad_orbits);
    }
    return detail::build_portrait(f, an.crit.rational_points(), an.rational_orbits);
}

inline AnyPortrait portrait_of(const PcfAnalysis& an, const Poly<Rational>& f) {
    if (!an.pcf) throw std::domain_error("portrait: polynomial is not post-critically finite");
    if (an.crit.kind == CriticalCase::IrrationalPair) {
        auto [g1, g2] = an.crit.quad_points();
        return detail::build_portrait(f, std::vector<QuadExtElem>{g1, g2}, an.quad_orbits);
    }
    return detail::build_portrait(f, an.crit.rational_points(), an.rational_orbits);
}

/**
 * The rational a for which a*z^d + 1 is post-critically finite, re-derived:
 * integrality forces a into {±1, ±2} (any prime in a denominator or |a| > 2
 * makes the critical orbit escape), and each survivor is decided by a
 * certified orbit computation at the critical point 0.
 */
inline std::set<Rational> unicritical_pcf_values(int d, long max_iter = 1000000) {
    if (d < 2) throw std::invalid_argument("unicritical_pcf_values: degree >= 2 required");
    std::set<Rational> out;
    for (int a : {-2, -1, 1, 2}) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
        coeffs[0] = 1;
        coeffs[static_cast<std::size_t>(d)] = a;
        Poly<Rational> f(std::move(coeffs));
        if (OrbitCertifier(f).run(Rational(0), max_iter).preperiodic) out.insert(Rational(a));
    }
    return out;
}

}  // namespace pcf
