#pragma once

// Test-only oracle for slope conditions: substitute xi literally into the
// numerator (an extra variable whose exponent is the total degree carried by
// the scaled slots), read off the xi-order of the scaled element as
// (numerator order) - (denominator correction), and compare against the
// limit exponent with exact Quad arithmetic. Independent of the sorted-prefix
// support conditions used by the library.

#include <random>

#include "loopchar/orbits.hpp"
#include "loopchar/slopes.hpp"

namespace loopchar::testoracle {

template <class K>
bool slope_test_oracle(const CartanData& c, const ShuffleElement<K>& e, const SlopeVector& p,
                       SlopeKind kind) {
    VarLayout layout = e.layout();
    int nv = layout.count();
    int s = e.sign == Sign::Plus ? 1 : -1;
    for (const auto& m : scaling_patterns(e.hdeg)) {
        // Literal substitution z_{ia} -> xi z_{ia} on the first m_i slots:
        // one extra variable tracks the xi power of every monomial.
        LaurentPoly<K> scaled(nv + 1);
        for (const auto& [exp, coef] : e.numer.terms()) {
            ExpVec ext(exp);
            long xi = 0;
            for (int i = 0; i < layout.rank(); ++i)
                for (int a = 0; a < m[static_cast<size_t>(i)]; ++a)
                    xi += exp[static_cast<size_t>(layout.index(i, a))];
            ext.push_back(static_cast<int>(xi));
            scaled.add_term(ext, coef);
        }
        long min_xi = 0, max_xi = 0;
        bool first = true;
        for (const auto& [exp, coef] : scaled.terms()) {
            long xi = exp.back();
            if (first) {
                min_xi = max_xi = xi;
                first = false;
            } else {
                min_xi = std::min(min_xi, xi);
                max_xi = std::max(max_xi, xi);
            }
        }
        require(!first, ErrorCode::ZeroPolynomial, "oracle on the zero element");
        Quad limit_exp = p.dot(m) * s;
        Quad ord0(min_xi - bothscaled(m));
        Quad deginf(max_xi - touched(e.hdeg, m));
        bool ok;
        switch (kind) {
            case SlopeKind::Geq:
                ok = e.sign == Sign::Plus ? ord0 >= limit_exp : deginf <= limit_exp;
                break;
            case SlopeKind::Gt:
                ok = e.sign == Sign::Plus ? ord0 > limit_exp : deginf < limit_exp;
                break;
            case SlopeKind::Leq:
                ok = e.sign == Sign::Plus ? deginf <= limit_exp : ord0 >= limit_exp;
                break;
            case SlopeKind::Lt:
                ok = e.sign == Sign::Plus ? deginf < limit_exp : ord0 > limit_exp;
                break;
        }
        if (!ok) return false;
    }
    return true;
}

/// Random homogeneous color-symmetric numerator with support in a small box.
template <class F>
ShuffleElement<typename F::Elem> random_element(const F& fld, std::mt19937_64& rng,
                                                const CartanData& c, const DegreeVector& n,
                                                Sign sign) {
    using K = typename F::Elem;
    VarLayout layout(n);
    long total = static_cast<long>(rng() % 9) - 2;
    auto orbits = orbit_enumerate(n, total, std::vector<int>(n.size(), -2), {},
                                  std::vector<int>(n.size(), 4));
    ShuffleElement<K> e;
    e.sign = sign;
    e.hdeg = n;
    e.numer = LaurentPoly<K>(layout.count());
    if (orbits.empty()) {
        // fall back to a plain monomial orbit of the requested degree
        std::vector<int> flat(n.size(), 0);
        MonomialOrbit o;
        o.exps.resize(n.size());
        long left = total;
        for (size_t i = 0; i < n.size(); ++i) {
            o.exps[i].assign(static_cast<size_t>(n[i]), 0);
            if (n[i] > 0 && i + 1 == n.size()) o.exps[i].back() = static_cast<int>(left);
        }
        e.numer += orbit_polynomial(layout, o, fld.one());
        return e;
    }
    int picks = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < picks; ++t) {
        const auto& o = orbits[rng() % orbits.size()];
        long coef = static_cast<long>(rng() % 7) - 3;
        if (coef == 0) coef = 1;
        e.numer += orbit_polynomial(layout, o, fld.one()).scaled(fld.from_int(coef));
    }
    if (e.numer.is_zero()) e.numer += orbit_polynomial(layout, orbits.front(), fld.one());
    return e;
}

/// Random slope vector: rational entries with small denominators, or a
/// quadratic-irrational entry mixed in.
inline SlopeVector random_slope(std::mt19937_64& rng, int rank) {
    std::vector<Quad> entries;
    for (int i = 0; i < rank; ++i) {
        mpq_class a(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        a.canonicalize();
        if (rng() % 4 == 0) {
            mpq_class b(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2));
            b.canonicalize();
            entries.emplace_back(a, b);
        } else {
            entries.emplace_back(a);
        }
    }
    return SlopeVector(std::move(entries));
}

}  // namespace loopchar::testoracle
