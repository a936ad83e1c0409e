#pragma once

#include <algorithm>
#include <vector>

#include "loopchar/laurent.hpp"

namespace loopchar {

/// Integrand of a nested-contour constant term: a Laurent numerator in the
/// ordered variables z_1..z_n together with denominator binomials
/// 1/(z_u - c z_v) and a regime (total order of the variables by magnitude).
/// Everything multiplicative beyond the binomials (pure zeta numerators,
/// the z^d monomial) is already expanded into the numerator.
template <class K>
struct RegimeIntegrand {
    struct DenFactor {
        int u;
        int v;
        K c;  // 1/(z_u - c z_v), c != 0
    };

    int nvars = 0;
    LaurentPoly<K> numerator;
    std::vector<DenFactor> denominators;
    std::vector<int> regime;  // positions listed from smallest to largest magnitude

    long homogeneous_degree() const {
        return numerator.homogeneous_degree() - static_cast<long>(denominators.size());
    }
};

/// Per-variable exponent window the extraction keeps. A plain constant term
/// is the all-zero window.
struct CtWindow {
    std::vector<int> lo;
    std::vector<int> hi;

    static CtWindow point(int nvars) {
        return CtWindow{std::vector<int>(static_cast<size_t>(nvars), 0),
                        std::vector<int>(static_cast<size_t>(nvars), 0)};
    }
};

/// Windowed constant-term extraction.
///
/// Variables are eliminated from the smallest magnitude up. At the step for
/// variable w every remaining denominator touching w pairs it with a larger
/// variable, so its geometric series in the regime carries nonnegative powers
/// of w:
///     w on the u side:  1/(z_w - c z_b) = -sum_k c^{-k-1} z_w^k z_b^{-k-1}
///     w on the v side:  1/(z_u - c z_w) =  sum_k c^k     z_w^k z_u^{-k-1}
/// Each series is truncated at the cap
///     cap = max(0, hi_w - min exponent of w in the current numerator) + bump
/// which bounds every power of w that can still land inside the window. The
/// caller certifies the caps by re-running with bump + 1 (CapInstability when
/// the two runs differ).
template <class F>
LaurentPoly<typename F::Elem> constant_term_window(const F& fld,
                                                   const RegimeIntegrand<typename F::Elem>& ri,
                                                   const CtWindow& win, int cap_bump = 0) {
    using K = typename F::Elem;
    int nv = ri.nvars;
    for (const auto& f : ri.denominators) {
        require(f.u != f.v, ErrorCode::ZeroConstantDivisor,
                "denominator binomial must separate two distinct variables");
        require(!f.c.is_zero(), ErrorCode::ZeroConstantDivisor,
                "denominator binomial needs a nonzero constant");
    }
    LaurentPoly<K> poly = ri.numerator;
    std::vector<char> absorbed(ri.denominators.size(), 0);
    std::vector<int> rank_of(static_cast<size_t>(nv), 0);
    for (size_t k = 0; k < ri.regime.size(); ++k)
        rank_of[static_cast<size_t>(ri.regime[k])] = static_cast<int>(k);

    for (int step = 0; step < nv; ++step) {
        int w = ri.regime[static_cast<size_t>(step)];
        if (poly.is_zero()) return LaurentPoly<K>(nv);
        // Collect the factors that pair w with a larger variable.
        std::vector<size_t> here;
        for (size_t fidx = 0; fidx < ri.denominators.size(); ++fidx) {
            if (absorbed[fidx]) continue;
            const auto& f = ri.denominators[fidx];
            if (f.u == w || f.v == w) {
                int other = f.u == w ? f.v : f.u;
                require(rank_of[static_cast<size_t>(other)] > step, ErrorCode::InternalError,
                        "regime order broken: factor pairs w with a smaller variable");
                here.push_back(fidx);
                absorbed[fidx] = 1;
            }
        }
        int lo = win.lo[static_cast<size_t>(w)];
        int hi = win.hi[static_cast<size_t>(w)];
        if (here.empty()) {
            // Nothing to expand; just restrict the exponent of w.
            LaurentPoly<K> kept(nv);
            for (const auto& [e, c] : poly.terms()) {
                int ew = e[static_cast<size_t>(w)];
                if (ew >= lo && ew <= hi) kept.add_term(e, c);
            }
            poly = std::move(kept);
            continue;
        }
        int min_e = 0;
        bool first = true;
        for (const auto& [e, c] : poly.terms()) {
            int ew = e[static_cast<size_t>(w)];
            if (first || ew < min_e) min_e = ew;
            first = false;
        }
        int cap = std::max(0, hi - min_e) + cap_bump;
        // Truncated product of the series attached to w.
        LaurentPoly<K> series = LaurentPoly<K>::constant(nv, fld.one());
        for (size_t fidx : here) {
            const auto& f = ri.denominators[fidx];
            LaurentPoly<K> factor(nv);
            if (f.v == w) {
                // 1/(z_u - c z_w), u larger: sum_k c^k z_w^k z_u^{-k-1}
                K ck = fld.one();
                for (int k = 0; k <= cap; ++k) {
                    ExpVec e(static_cast<size_t>(nv), 0);
                    e[static_cast<size_t>(w)] = k;
                    e[static_cast<size_t>(f.u)] = -k - 1;
                    factor.add_term(e, ck);
                    ck = ck * f.c;
                }
            } else {
                // 1/(z_w - c z_b), b larger: -sum_k c^{-k-1} z_w^k z_b^{-k-1}
                K cinv = fld.one() / f.c;
                K ck = cinv;
                for (int k = 0; k <= cap; ++k) {
                    ExpVec e(static_cast<size_t>(nv), 0);
                    e[static_cast<size_t>(w)] = k;
                    e[static_cast<size_t>(f.v)] = -k - 1;
                    factor.add_term(e, -ck);
                    ck = ck * cinv;
                }
            }
            // Multiply, dropping powers of w beyond the cap.
            LaurentPoly<K> next(nv);
            for (const auto& [e1, c1] : series.terms()) {
                for (const auto& [e2, c2] : factor.terms()) {
                    if (e1[static_cast<size_t>(w)] + e2[static_cast<size_t>(w)] > cap) continue;
                    ExpVec e(e1);
                    for (size_t t = 0; t < e.size(); ++t) e[t] += e2[t];
                    next.add_term(e, c1 * c2);
                }
            }
            series = std::move(next);
        }
        // Merge into the numerator, keeping only w-exponents in the window.
        LaurentPoly<K> next(nv);
        for (const auto& [e1, c1] : poly.terms()) {
            for (const auto& [e2, c2] : series.terms()) {
                int ew = e1[static_cast<size_t>(w)] + e2[static_cast<size_t>(w)];
                if (ew < lo || ew > hi) continue;
                ExpVec e(e1);
                for (size_t t = 0; t < e.size(); ++t) e[t] += e2[t];
                next.add_term(e, c1 * c2);
            }
        }
        poly = std::move(next);
    }
    return poly;
}

/// Plain constant term (the all-zero window), with an optional degree
/// shortcut: a homogeneous integrand of nonzero total degree has no constant
/// term.
template <class F>
typename F::Elem constant_term(const F& fld, const RegimeIntegrand<typename F::Elem>& ri,
                               int cap_bump = 0) {
    using K = typename F::Elem;
    if (ri.numerator.is_zero()) return fld.zero();
    if (ri.numerator.is_homogeneous() && ri.homogeneous_degree() != 0) return fld.zero();
    LaurentPoly<K> out = constant_term_window(fld, ri, CtWindow::point(ri.nvars), cap_bump);
    return out.coeff(ExpVec(static_cast<size_t>(ri.nvars), 0));
}

/// Cap-certified constant term: evaluate at the derived caps and at caps + 1
/// and demand agreement.
template <class F>
typename F::Elem constant_term_certified(const F& fld,
                                         const RegimeIntegrand<typename F::Elem>& ri) {
    auto v0 = constant_term(fld, ri, 0);
    auto v1 = constant_term(fld, ri, 1);
    require(v0 == v1, ErrorCode::CapInstability,
            "constant term changed under cap increase");
    return v0;
}

}  // namespace loopchar
