#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loopchar/orbits.hpp"
#include "loopchar/quad.hpp"
#include "loopchar/shuffle.hpp"

namespace loopchar {

enum class SlopeKind { Geq, Gt, Leq, Lt };

inline const char* slope_kind_name(SlopeKind k) {
    switch (k) {
        case SlopeKind::Geq: return ">=";
        case SlopeKind::Gt: return ">";
        case SlopeKind::Leq: return "<=";
        case SlopeKind::Lt: return "<";
    }
    return "?";
}

/// Number of denominator factors with both variables scaled under pattern m.
inline long bothscaled(const DegreeVector& m) {
    long s = 0;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) s += static_cast<long>(m[i]) * m[j];
    return s;
}

/// Number of denominator factors touching at least one scaled variable.
inline long touched(const DegreeVector& n, const DegreeVector& m) {
    long s = 0;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            s += static_cast<long>(n[i]) * n[j] -
                 static_cast<long>(n[i] - m[i]) * (n[j] - m[j]);
    return s;
}

/// All scaling patterns 0 < m <= n, deterministic order.
std::vector<DegreeVector> scaling_patterns(const DegreeVector& n);

/// Translate one slope condition on the numerator support into prefix-sum
/// constraints, one per scaling pattern 0 < m <= n.
///
/// A factor (z_{ia} - z_{jb}) of the standard denominator has xi-order 1 at
/// xi -> 0 when both variables are scaled and xi-degree 1 at xi -> infinity
/// when at least one is, so the defining slope limits reduce to
///   xi -> 0      min scaled order of rho >= (+-p.m) + bothscaled(m)
///   xi -> inf    max scaled order of rho <= (+-p.m) + touched(m)
/// (+ for the plus sign, - for the minus sign; strict kinds shift the integer
/// threshold by one). Scaling maps distinct monomials to distinct monomials,
/// so the support reading is exact, and color symmetry lets sorted prefixes
/// stand in for "the first m_i slots".
///
/// Sentinels: slope >= -inf and slope > -inf (and dually < or <= +inf) hold
/// for every element, giving an empty constraint list.
std::vector<PrefixConstraint> slope_constraints(const DegreeVector& n, Sign sign,
                                                const SlopeVector& p, SlopeKind kind);

/// Decide the slope condition for one element via its numerator support.
template <class K>
bool slope_test(const CartanData& c, const ShuffleElement<K>& e, const SlopeVector& p,
                SlopeKind kind) {
    require(!e.numer.is_zero(), ErrorCode::ZeroPolynomial, "slope_test of zero");
    e.numer.homogeneous_degree();  // throws Inhomogeneous if not graded
    VarLayout layout = e.layout();
    std::vector<PrefixConstraint> cs = slope_constraints(e.hdeg, e.sign, p, kind);
    for (const auto& [exp, coef] : e.numer.terms()) {
        MonomialOrbit o = orbit_of(layout, exp);
        for (const auto& con : cs)
            if (!con.satisfied_by(o)) return false;
    }
    return true;
}

/// Basis of a graded slope subspace: the admissible orbit polytope cut by the
/// wheel nullspace.
template <class K>
struct SubspaceBasis {
    Sign sign = Sign::Minus;
    DegreeVector n;
    long d = 0;
    std::vector<MonomialOrbit> orbits;        // admissible orbit polytope
    std::vector<std::vector<K>> coords;       // basis vectors in orbit coordinates
    std::vector<LaurentPoly<K>> elements;     // the same vectors as numerators
    std::string provenance = "rational";

    size_t dim() const { return coords.size(); }
};

namespace detail {

template <class F>
SubspaceBasis<typename F::Elem> basis_from_polytope(const F& fld, const CartanData& c, Sign sign,
                                                    const DegreeVector& n, long d,
                                                    const std::vector<MonomialOrbit>& orbits) {
    using K = typename F::Elem;
    SubspaceBasis<K> basis;
    basis.sign = sign;
    basis.n = n;
    basis.d = d;
    basis.orbits = orbits;
    if (orbits.empty()) return basis;
    VarLayout layout(n);
    Matrix<K> constraints = wheel_constraints(fld, c, n, orbits);
    if (constraints.rows() == 0) {
        for (size_t k = 0; k < orbits.size(); ++k) {
            std::vector<K> v(orbits.size(), fld.zero());
            v[k] = fld.one();
            basis.coords.push_back(std::move(v));
        }
    } else {
        basis.coords = nullspace(constraints, fld.one());
    }
    for (const auto& v : basis.coords) {
        LaurentPoly<K> p(layout.count());
        for (size_t k = 0; k < orbits.size(); ++k) {
            if (v[k].is_zero()) continue;
            p += orbit_polynomial(layout, orbits[k], fld.one()).scaled(v[k]);
        }
        basis.elements.push_back(std::move(p));
    }
    return basis;
}

/// Derive per-color lower bounds for the enumerator. Constraints at the unit
/// patterns bound the smallest exponent of each color directly; when only
/// upper bounds exist, the fixed total degree supplies the missing side.
std::vector<int> derive_lower_bounds(const DegreeVector& n, long total,
                                     const std::vector<PrefixConstraint>& cs);

void require_finite_type(const CartanData& c);

}  // namespace detail

/// Basis of S_{<0 | -n, d}: strict xi -> 0 conditions at p = 0, total degree
/// d + D(n), wheel nullspace. Finite type only.
template <class F>
SubspaceBasis<typename F::Elem> basis_minus_strictneg(const F& fld, const CartanData& c,
                                                      const DegreeVector& n, long d) {
    detail::require_finite_type(c);
    if (d < 1) {
        // Slope < 0 forces every exponent to be positive, so vdeg >= 1.
        SubspaceBasis<typename F::Elem> empty;
        empty.sign = Sign::Minus;
        empty.n = n;
        empty.d = d;
        return empty;
    }
    long total = d + c.denominator_count(n);
    auto cs = slope_constraints(n, Sign::Minus, SlopeVector::constant(c.rank(), Quad(0)),
                                SlopeKind::Lt);
    auto lower = detail::derive_lower_bounds(n, total, cs);
    auto orbits = orbit_enumerate(n, total, lower, cs);
    return detail::basis_from_polytope(fld, c, Sign::Minus, n, d, orbits);
}

/// Basis of S_{>= p | n, d} on the plus side.
template <class F>
SubspaceBasis<typename F::Elem> basis_plus_geq(const F& fld, const CartanData& c,
                                               const SlopeVector& p, const DegreeVector& n,
                                               long d) {
    detail::require_finite_type(c);
    require(p.finite(), ErrorCode::InfinitePolytope, "basis_plus_geq needs a finite slope");
    long total = d + c.denominator_count(n);
    auto cs = slope_constraints(n, Sign::Plus, p, SlopeKind::Geq);
    auto lower = detail::derive_lower_bounds(n, total, cs);
    auto orbits = orbit_enumerate(n, total, lower, cs);
    auto basis = detail::basis_from_polytope(fld, c, Sign::Plus, n, d, orbits);
    return basis;
}

/// Basis of S^-_{> p1} cap S^-_{< p2} at (-n, d). Sentinel p1 = -inf reduces
/// to the strict -< p2 half; p1 < p2 is required componentwise.
template <class F>
SubspaceBasis<typename F::Elem> basis_minus_band(const F& fld, const CartanData& c,
                                                 const SlopeVector& p1, const SlopeVector& p2,
                                                 const DegreeVector& n, long d) {
    detail::require_finite_type(c);
    require(SlopeVector::less(p1, p2), ErrorCode::EmptyBand,
            "band needs p1 < p2 componentwise, got " + p1.to_string() + " vs " + p2.to_string());
    long total = d + c.denominator_count(n);
    auto cs = slope_constraints(n, Sign::Minus, p1, SlopeKind::Gt);
    auto cs2 = slope_constraints(n, Sign::Minus, p2, SlopeKind::Lt);
    cs.insert(cs.end(), cs2.begin(), cs2.end());
    auto lower = detail::derive_lower_bounds(n, total, cs);
    auto orbits = orbit_enumerate(n, total, lower, cs);
    return detail::basis_from_polytope(fld, c, Sign::Minus, n, d, orbits);
}

/// dim B_{p|n} on the plus side: both slope conditions at p, vertical degree
/// locked to p . n (zero whenever p . n is not an integer).
template <class F>
long slope_subalgebra_dim(const F& fld, const CartanData& c, const SlopeVector& p,
                          const DegreeVector& n) {
    detail::require_finite_type(c);
    require(p.finite(), ErrorCode::InternalError, "slope subalgebra needs a finite slope");
    if (is_zero(n)) return 1;
    Quad pn = p.dot(n);
    if (!pn.is_integer()) return 0;
    long d = pn.floor();
    long total = d + c.denominator_count(n);
    auto cs = slope_constraints(n, Sign::Plus, p, SlopeKind::Geq);
    auto cs2 = slope_constraints(n, Sign::Plus, p, SlopeKind::Leq);
    cs.insert(cs.end(), cs2.begin(), cs2.end());
    auto lower = detail::derive_lower_bounds(n, total, cs);
    auto orbits = orbit_enumerate(n, total, lower, cs);
    auto basis = detail::basis_from_polytope(fld, c, Sign::Plus, n, d, orbits);
    return static_cast<long>(basis.dim());
}

/// Enumerate the words with letter degrees over per-color floors summing to
/// a fixed total, across all orderings of n; deterministic order.
std::vector<Word> enumerate_words(const CartanData& c, Sign sign, const DegreeVector& n,
                                  long degree_sum, const std::vector<int>& letter_floor);

/// Rank of the span of word images, expressed in monomial-orbit coordinates.
/// Works beyond finite type (no wheel machinery involved); see the dims
/// command for the comparison against rational bases.
template <class F>
long word_span_dim(const F& fld, const CartanData& c, const DegreeVector& n, long d,
                   const std::vector<int>& letter_floor) {
    using K = typename F::Elem;
    std::vector<Word> words = enumerate_words(c, Sign::Plus, n, d, letter_floor);
    if (words.empty()) return 0;
    VarLayout layout(n);
    std::set<MonomialOrbit> orbit_set;
    std::vector<LaurentPoly<K>> images;
    for (const auto& w : words) {
        auto e = word_to_element(fld, c, w);
        for (const auto& [exp, coef] : e.numer.terms()) orbit_set.insert(orbit_of(layout, exp));
        images.push_back(std::move(e.numer));
    }
    std::vector<MonomialOrbit> orbits(orbit_set.begin(), orbit_set.end());
    RankTracker<K> tracker(orbits.size());
    for (const auto& img : images) tracker.offer(orbit_coordinates(layout, img, orbits));
    return static_cast<long>(tracker.rank());
}

}  // namespace loopchar
