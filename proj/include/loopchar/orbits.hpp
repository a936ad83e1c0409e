#pragma once

#include <optional>
#include <vector>

#include "loopchar/cartan.hpp"
#include "loopchar/laurent.hpp"

namespace loopchar {

/// Color-symmetrization orbit of a monomial: one ascending exponent multiset
/// per color. Orbits partition the monomial set; a color-symmetric polynomial
/// is determined by one coefficient per orbit.
struct MonomialOrbit {
    std::vector<std::vector<int>> exps;  // exps[color] sorted ascending

    bool operator<(const MonomialOrbit& o) const { return exps < o.exps; }
    bool operator==(const MonomialOrbit& o) const { return exps == o.exps; }

    long total_degree() const {
        long s = 0;
        for (const auto& col : exps)
            for (int x : col) s += x;
        return s;
    }
    /// Sum of the m_i smallest exponents per color.
    long prefix_min_sum(const DegreeVector& m) const {
        long s = 0;
        for (size_t i = 0; i < exps.size(); ++i)
            for (int a = 0; a < m[i]; ++a) s += exps[i][static_cast<size_t>(a)];
        return s;
    }
    /// Sum of the m_i largest exponents per color.
    long suffix_max_sum(const DegreeVector& m) const {
        long s = 0;
        for (size_t i = 0; i < exps.size(); ++i) {
            size_t n = exps[i].size();
            for (int a = 0; a < m[i]; ++a) s += exps[i][n - 1 - static_cast<size_t>(a)];
        }
        return s;
    }

    std::string to_string() const;
};

/// Orbit of the monomial with exponent vector e (sort per color).
MonomialOrbit orbit_of(const VarLayout& layout, const ExpVec& e);

/// The representative monomial: exponents ascending within each color block.
ExpVec representative(const VarLayout& layout, const MonomialOrbit& o);

/// Support condition applied to sorted exponent prefixes: either
///   sum of m_i smallest per color >= bound   (MinAtLeast), or
///   sum of m_i largest  per color <= bound   (MaxAtMost).
struct PrefixConstraint {
    enum class Kind { MinAtLeast, MaxAtMost };
    DegreeVector m;
    long bound = 0;
    Kind kind = Kind::MinAtLeast;

    bool satisfied_by(const MonomialOrbit& o) const {
        if (kind == Kind::MinAtLeast) return o.prefix_min_sum(m) >= bound;
        return o.suffix_max_sum(m) <= bound;
    }
};

/// All orbits in the finite polytope cut out by the fixed total degree,
/// per-color exponent bounds, and the prefix-sum constraints; deterministic
/// (sorted) order. The per-color lower bound is what makes the polytope
/// finite, so its absence is an error rather than a silent hang.
std::vector<MonomialOrbit> orbit_enumerate(const DegreeVector& n, long total_degree,
                                           const std::optional<std::vector<int>>& lower,
                                           const std::vector<PrefixConstraint>& constraints,
                                           const std::optional<std::vector<int>>& upper = std::nullopt);

/// The monomial symmetric polynomial of the orbit: every distinct monomial in
/// the orbit with coefficient 1.
template <class K>
LaurentPoly<K> orbit_polynomial(const VarLayout& layout, const MonomialOrbit& o, const K& one) {
    LaurentPoly<K> p(layout.count());
    std::vector<std::vector<int>> perm(o.exps);
    // Iterate distinct per-color arrangements via odometer of next_permutation.
    for (auto& col : perm) std::sort(col.begin(), col.end());
    while (true) {
        ExpVec e(static_cast<size_t>(layout.count()), 0);
        for (int i = 0; i < layout.rank(); ++i)
            for (size_t a = 0; a < perm[static_cast<size_t>(i)].size(); ++a)
                e[static_cast<size_t>(layout.index(i, static_cast<int>(a)))] =
                    perm[static_cast<size_t>(i)][a];
        p.add_term(e, one);
        int c = layout.rank() - 1;
        while (c >= 0 && !std::next_permutation(perm[static_cast<size_t>(c)].begin(),
                                                perm[static_cast<size_t>(c)].end()))
            --c;
        if (c < 0) break;
        for (int j = c + 1; j < layout.rank(); ++j)
            std::sort(perm[static_cast<size_t>(j)].begin(), perm[static_cast<size_t>(j)].end());
    }
    return p;
}

/// Coordinates of a color-symmetric polynomial in the orbit basis: the
/// coefficient at each orbit's representative monomial. Orbits not listed in
/// `basis` must not occur in the support (checked).
template <class K>
std::vector<K> orbit_coordinates(const VarLayout& layout, const LaurentPoly<K>& f,
                                 const std::vector<MonomialOrbit>& basis) {
    std::map<MonomialOrbit, size_t> index;
    for (size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    std::vector<K> coords(basis.size(), K());
    for (const auto& [e, c] : f.terms()) {
        MonomialOrbit o = orbit_of(layout, e);
        auto it = index.find(o);
        require(it != index.end(), ErrorCode::InternalError,
                "support leaves the orbit basis at " + o.to_string());
        if (e == representative(layout, o)) coords[it->second] = c;
    }
    return coords;
}

}  // namespace loopchar
