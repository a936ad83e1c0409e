#pragma once

#include <map>
#include <vector>

#include "loopchar/cartan.hpp"
#include "loopchar/laurent.hpp"
#include "loopchar/linalg.hpp"
#include "loopchar/orbits.hpp"

namespace loopchar {

/// One wheel instance: ordered color pair (i, j), i != j, applicable when
/// n_i >= 1 - 2 d_ij / d_ii and n_j >= 1. The substitution sends the first
/// wheel_len slots of color i to (w, w q^{d_ii}, ..., w q^{(len-1) d_ii}) and
/// the first slot of color j to w q^{-d_ij}; every other variable stays free.
struct WheelInstance {
    int color_i;
    int color_j;
    int length;
};

inline std::vector<WheelInstance> wheel_instances(const CartanData& c, const DegreeVector& n) {
    std::vector<WheelInstance> out;
    for (int i = 0; i < c.rank(); ++i) {
        for (int j = 0; j < c.rank(); ++j) {
            if (i == j) continue;
            int len = c.wheel_length(i, j);
            if (n[static_cast<size_t>(i)] >= len && n[static_cast<size_t>(j)] >= 1)
                out.push_back({i, j, len});
        }
    }
    return out;
}

/// Substitute one wheel into f: the result lives in variables
/// (w, the untouched variables); exponent 0 of f's nvars()+1 slot... the
/// returned polynomial uses nvars()+1 slots with slot nvars() playing w and
/// substituted slots always 0.
template <class F>
LaurentPoly<typename F::Elem> wheel_substitute(const F& fld, const CartanData& c,
                                               const VarLayout& layout,
                                               const LaurentPoly<typename F::Elem>& f,
                                               const WheelInstance& wi) {
    using K = typename F::Elem;
    int nv = layout.count();
    LaurentPoly<K> out(nv + 1);
    int dii = c.d(wi.color_i, wi.color_i);
    int dij = c.d(wi.color_i, wi.color_j);
    for (const auto& [e, coef] : f.terms()) {
        ExpVec r(static_cast<size_t>(nv + 1), 0);
        long w_exp = 0;
        long q_exp = 0;
        for (int idx = 0; idx < nv; ++idx) {
            int exp = e[static_cast<size_t>(idx)];
            if (exp == 0) continue;
            int color = layout.color_of(idx);
            int slot = idx - layout.offset(color);
            if (color == wi.color_i && slot < wi.length) {
                w_exp += exp;
                q_exp += static_cast<long>(slot) * dii * exp;
            } else if (color == wi.color_j && slot == 0) {
                w_exp += exp;
                q_exp += static_cast<long>(-dij) * exp;
            } else {
                r[static_cast<size_t>(idx)] = exp;
            }
        }
        r[static_cast<size_t>(nv)] = static_cast<int>(w_exp);
        out.add_term(r, coef * fld.q_pow(q_exp));
    }
    return out;
}

/// Constraint matrix of the Feigin-Odesskii wheel conditions on an orbit
/// basis: one row per (wheel instance, residual monomial), one column per
/// orbit; a color-symmetric polynomial with orbit coordinates x lies in the
/// shuffle algebra iff (matrix) x = 0. Empty matrix when no wheel applies.
template <class F>
Matrix<typename F::Elem> wheel_constraints(const F& fld, const CartanData& c,
                                           const DegreeVector& n,
                                           const std::vector<MonomialOrbit>& orbit_basis) {
    using K = typename F::Elem;
    VarLayout layout(n);
    std::vector<WheelInstance> instances = wheel_instances(c, n);
    Matrix<K> m(0, orbit_basis.size());
    if (instances.empty() || orbit_basis.empty()) {
        return Matrix<K>(0, orbit_basis.size());
    }
    for (const auto& wi : instances) {
        std::map<ExpVec, std::vector<K>> rows;  // residual monomial -> row
        for (size_t col = 0; col < orbit_basis.size(); ++col) {
            LaurentPoly<K> p = orbit_polynomial(layout, orbit_basis[col], fld.one());
            LaurentPoly<K> s = wheel_substitute(fld, c, layout, p, wi);
            for (const auto& [e, coef] : s.terms()) {
                auto it = rows.find(e);
                if (it == rows.end())
                    it = rows.emplace(e, std::vector<K>(orbit_basis.size(), fld.zero())).first;
                it->second[col] += coef;
            }
        }
        for (auto& [e, row] : rows) m.append_row(row);
    }
    return m;
}

}  // namespace loopchar
