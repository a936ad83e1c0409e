#pragma once

#include <string>
#include <vector>

#include "loopchar/cartan.hpp"
#include "loopchar/laurent.hpp"
#include "loopchar/wheel.hpp"

namespace loopchar {

enum class Sign { Plus, Minus };

inline const char* sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

/// The factor zeta_ij(x) = (x - q^{-d_ij})/(x - 1); only the exponent -d_ij
/// is data, the rest is shape.
struct ZetaFactor {
    long num_qexp;  // exponent in the numerator constant q^{num_qexp}

    bool is_one() const { return num_qexp == 0; }
    std::string to_string() const {
        if (is_one()) return "1";
        return "(x - q^" + std::to_string(num_qexp) + ")/(x - 1)";
    }
};

inline ZetaFactor zeta_factor(const CartanData& c, int i, int j) {
    return ZetaFactor{-static_cast<long>(c.d(i, j))};
}

/// Word in the letters e_{i,d} (plus) or f_{i,d} (minus).
struct Word {
    Sign sign = Sign::Plus;
    std::vector<std::pair<int, int>> letters;  // (color, degree)

    size_t size() const { return letters.size(); }
    DegreeVector hdeg(int rank) const {
        DegreeVector n(static_cast<size_t>(rank), 0);
        for (const auto& [i, d] : letters) ++n[static_cast<size_t>(i)];
        return n;
    }
    long vdeg() const {
        long s = 0;
        for (const auto& [i, d] : letters) s += d;
        return s;
    }
    std::string to_string() const;
};

/// Graded shuffle-algebra element: numerator over the standard denominator
/// prod_{i<j} prod_{a,b} (z_{ia} - z_{jb}). The horizontal degree is stored
/// unsigned; the sign field carries the +/- of S^{+-}.
template <class K>
struct ShuffleElement {
    Sign sign = Sign::Plus;
    DegreeVector hdeg;
    LaurentPoly<K> numer;

    VarLayout layout() const { return VarLayout(hdeg); }
    bool is_zero() const { return numer.is_zero(); }
};

template <class F>
ShuffleElement<typename F::Elem> one_letter_element(const F& fld, int rank, Sign sign, int color,
                                                    int degree) {
    using K = typename F::Elem;
    ShuffleElement<K> e;
    e.sign = sign;
    e.hdeg = unit_vector(rank, color);
    ExpVec exp(1, degree);
    e.numer = LaurentPoly<K>::monomial(1, exp, fld.one());
    return e;
}

template <class F>
ShuffleElement<typename F::Elem> unit_element(const F& fld, int rank, Sign sign) {
    using K = typename F::Elem;
    ShuffleElement<K> e;
    e.sign = sign;
    e.hdeg = DegreeVector(static_cast<size_t>(rank), 0);
    e.numer = LaurentPoly<K>::constant(0, fld.one());
    return e;
}

namespace detail {

// Numerator of the product in the big algebra V: sum over per-color shuffles
// of rho_a(z_S) rho_b(z_Sbar) times the cross zeta numerators, put over the
// common denominator prod_{i, u<v} (z_{iu} - z_{iv}) and divided out exactly.
// Same-color cross factors must cancel after the sum; div_binomial_exact
// raises if they do not.
template <class F>
LaurentPoly<typename F::Elem> v_product_numer(const F& fld, const CartanData& c,
                                              const DegreeVector& na,
                                              const LaurentPoly<typename F::Elem>& ra,
                                              const DegreeVector& nb,
                                              const LaurentPoly<typename F::Elem>& rb) {
    using K = typename F::Elem;
    int rank = c.rank();
    DegreeVector n = add(na, nb);
    VarLayout layout(n);
    int nv = layout.count();

    // Per-color subsets of combined slots assigned to the left factor,
    // each encoded as a sorted index vector.
    std::vector<std::vector<std::vector<int>>> combos(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        int tot = n[static_cast<size_t>(i)];
        int pick = na[static_cast<size_t>(i)];
        std::vector<int> idx(static_cast<size_t>(pick));
        for (int k = 0; k < pick; ++k) idx[static_cast<size_t>(k)] = k;
        if (pick == 0) {
            combos[static_cast<size_t>(i)].push_back({});
            continue;
        }
        while (true) {
            combos[static_cast<size_t>(i)].push_back(idx);
            int k = pick - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == tot - pick + k) --k;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
            for (int j = k + 1; j < pick; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }

    LaurentPoly<K> acc(nv);
    std::vector<size_t> choice(static_cast<size_t>(rank), 0);
    while (true) {
        // Build the slot assignment for this shuffle.
        std::vector<char> is_left(static_cast<size_t>(nv), 0);
        std::vector<int> left_map;   // left variable index -> combined index
        std::vector<int> right_map;  // right variable index -> combined index
        for (int i = 0; i < rank; ++i) {
            const auto& s = combos[static_cast<size_t>(i)][choice[static_cast<size_t>(i)]];
            std::vector<char> taken(static_cast<size_t>(n[static_cast<size_t>(i)]), 0);
            for (int slot : s) {
                left_map.push_back(layout.index(i, slot));
                taken[static_cast<size_t>(slot)] = 1;
                is_left[static_cast<size_t>(layout.index(i, slot))] = 1;
            }
            for (int slot = 0; slot < n[static_cast<size_t>(i)]; ++slot)
                if (!taken[static_cast<size_t>(slot)]) right_map.push_back(layout.index(i, slot));
        }

        // Embed the factors into the combined variable set.
        LaurentPoly<K> term(nv);
        {
            LaurentPoly<K> ea(nv);
            for (const auto& [e, coef] : ra.terms()) {
                ExpVec ee(static_cast<size_t>(nv), 0);
                for (size_t k = 0; k < e.size(); ++k) ee[static_cast<size_t>(left_map[k])] = e[k];
                ea.add_term(ee, coef);
            }
            LaurentPoly<K> eb(nv);
            for (const auto& [e, coef] : rb.terms()) {
                ExpVec ee(static_cast<size_t>(nv), 0);
                for (size_t k = 0; k < e.size(); ++k) ee[static_cast<size_t>(right_map[k])] = e[k];
                eb.add_term(ee, coef);
            }
            term = ea * eb;
        }

        int sign_flips = 0;
        // Cross zeta numerators (z_left - q^{-d_ij} z_right) and the sign
        // bookkeeping that matches the fixed orientations of the standard
        // denominator and of W_i = prod_{u<v} (z_{iu} - z_{iv}).
        for (int u : left_map) {
            int iu = layout.color_of(u);
            for (int v : right_map) {
                int jv = layout.color_of(v);
                term = term.mul_binomial(u, v, fld.q_pow(-c.d(iu, jv)));
                if (iu == jv) {
                    if (u > v) ++sign_flips;
                } else if (iu > jv) {
                    ++sign_flips;
                }
            }
        }
        // Same-color pairs not separated by this shuffle complete the common
        // denominator.
        for (int i = 0; i < rank; ++i) {
            for (int u = 0; u < n[static_cast<size_t>(i)]; ++u) {
                for (int v = u + 1; v < n[static_cast<size_t>(i)]; ++v) {
                    int gu = layout.index(i, u), gv = layout.index(i, v);
                    if (is_left[static_cast<size_t>(gu)] != is_left[static_cast<size_t>(gv)])
                        continue;
                    term = term.mul_binomial(gu, gv, fld.one());
                }
            }
        }
        if (sign_flips % 2) term = -term;
        acc += term;

        // Advance the odometer over per-color subset choices.
        int i = rank - 1;
        while (i >= 0) {
            if (++choice[static_cast<size_t>(i)] < combos[static_cast<size_t>(i)].size()) break;
            choice[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }

    // Divide the accumulated sum by every same-color difference.
    for (int i = 0; i < rank; ++i)
        for (int u = 0; u < n[static_cast<size_t>(i)]; ++u)
            for (int v = u + 1; v < n[static_cast<size_t>(i)]; ++v) {
                if (acc.is_zero()) return acc;
                acc = acc.div_binomial_exact(layout.index(i, u), layout.index(i, v));
            }
    return acc;
}

}  // namespace detail

/// Shuffle product of two same-sign elements. Plus elements multiply in V;
/// minus elements multiply in V^op, i.e. with the operand order reversed.
template <class F>
ShuffleElement<typename F::Elem> shuffle_product(const F& fld, const CartanData& c,
                                                 const ShuffleElement<typename F::Elem>& a,
                                                 const ShuffleElement<typename F::Elem>& b) {
    using K = typename F::Elem;
    require(a.sign == b.sign, ErrorCode::MixedSigns, "shuffle product needs matching signs");
    ShuffleElement<K> r;
    r.sign = a.sign;
    r.hdeg = add(a.hdeg, b.hdeg);
    if (a.sign == Sign::Plus)
        r.numer = detail::v_product_numer(fld, c, a.hdeg, a.numer, b.hdeg, b.numer);
    else
        r.numer = detail::v_product_numer(fld, c, b.hdeg, b.numer, a.hdeg, a.numer);
    return r;
}

/// Image of a word under Upsilon: iterated shuffle product of one-variable
/// elements z^{d_a}.
template <class F>
ShuffleElement<typename F::Elem> word_to_element(const F& fld, const CartanData& c, const Word& w) {
    using K = typename F::Elem;
    ShuffleElement<K> acc = unit_element(fld, c.rank(), w.sign);
    for (const auto& [color, deg] : w.letters) {
        ShuffleElement<K> letter = one_letter_element(fld, c.rank(), w.sign, color, deg);
        acc = shuffle_product(fld, c, acc, letter);
    }
    return acc;
}

/// Shift automorphism sigma_r: multiply by prod z_{ia}^{+-r_i} (+ on the plus
/// side, - on the minus side); vdeg moves by +-(r . n).
template <class K>
ShuffleElement<K> shift(const ShuffleElement<K>& e, const DegreeVector& r) {
    ShuffleElement<K> out = e;
    VarLayout layout = e.layout();
    int s = e.sign == Sign::Plus ? 1 : -1;
    for (int i = 0; i < layout.rank(); ++i) {
        int delta = s * r[static_cast<size_t>(i)];
        if (delta == 0) continue;
        for (int a = 0; a < e.hdeg[static_cast<size_t>(i)]; ++a)
            out.numer = out.numer.shift_variable(layout.index(i, a), delta);
    }
    return out;
}

/// Degrees (hdeg with sign, vdeg); vdeg = deg rho - D(n).
template <class K>
std::pair<DegreeVector, long> degrees(const CartanData& c, const ShuffleElement<K>& e) {
    long d = e.numer.homogeneous_degree() - c.denominator_count(e.hdeg);
    DegreeVector h = e.hdeg;
    if (e.sign == Sign::Minus)
        for (auto& x : h) x = -x;
    return {h, d};
}

/// Wheel membership: the numerator must vanish under every applicable wheel
/// substitution. Finite type only (the equality of the shuffle algebra with
/// the wheel space is a finite-type statement).
template <class F>
bool wheel_check(const F& fld, const CartanData& c, const ShuffleElement<typename F::Elem>& e) {
    if (!c.finite_type_tag().has_value()) positive_roots(c);  // throws NotFiniteType
    VarLayout layout = e.layout();
    for (const auto& wi : wheel_instances(c, e.hdeg)) {
        LaurentPoly<typename F::Elem> s = wheel_substitute(fld, c, layout, e.numer, wi);
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace loopchar
