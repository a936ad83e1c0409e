#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopchar/ct.hpp"
#include "loopchar/slopes.hpp"

namespace loopchar {

/// Evaluation options shared by the pairing entry points. cap_check re-runs
/// every constant term with all truncation caps raised by one and fails hard
/// on disagreement.
struct PairingOptions {
    bool cap_check = true;
};

namespace detail {

/// Shared integrand of <e_{i_1,d_1} * ... * e_{i_n,d_n}, F> (and its antipode
/// twist): z^d F(z_1,...,z_n) / prod_{a<b} zeta_{i_b i_a}(z_b/z_a), with F's
/// standard denominator folded in. Writing 1/zeta as
/// (z_b - z_a)/(z_b - q^{-d_ij} z_a) and cancelling the different-color
/// (z_a - z_b) factors against the standard denominator leaves:
///   numerator: rho (colored slots identified with positions along the
///              ordering) times (z_b - z_a) over same-color pairs a < b,
///   denominators: (z_b - q^{-d_{i_a i_b}} z_a) over all pairs a < b,
///   sign: (-1)^{#{a<b : i_a < i_b, different colors}} from re-orienting the
///         cancelled factors to the color-sorted convention.
template <class F>
struct WordIntegrand {
    RegimeIntegrand<typename F::Elem> ri;
    int sign = 1;     // orientation sign above
    int npos = 0;     // number of positions
};

template <class F>
WordIntegrand<F> word_integrand(const F& fld, const CartanData& c,
                                const std::vector<int>& ordering,
                                const ShuffleElement<typename F::Elem>& minus_elem) {
    using K = typename F::Elem;
    int n = static_cast<int>(ordering.size());
    VarLayout layout = minus_elem.layout();
    // Position a <-> colored slot (i_a, next unused slot of that color).
    std::vector<int> perm(static_cast<size_t>(layout.count()), 0);
    DegreeVector used(static_cast<size_t>(c.rank()), 0);
    for (int a = 0; a < n; ++a) {
        int color = ordering[static_cast<size_t>(a)];
        perm[static_cast<size_t>(layout.index(color, used[static_cast<size_t>(color)]))] = a;
        ++used[static_cast<size_t>(color)];
    }
    require(used == minus_elem.hdeg, ErrorCode::InternalError,
            "ordering does not match the element's horizontal degree");

    WordIntegrand<F> out;
    out.npos = n;
    out.ri.nvars = n;
    out.ri.numerator = LaurentPoly<K>(n);
    // rho with positions as variables.
    for (const auto& [e, coef] : minus_elem.numer.terms()) {
        ExpVec pe(static_cast<size_t>(n), 0);
        for (size_t k = 0; k < e.size(); ++k) pe[static_cast<size_t>(perm[k])] = e[k];
        out.ri.numerator.add_term(pe, coef);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int ia = ordering[static_cast<size_t>(a)];
            int ib = ordering[static_cast<size_t>(b)];
            if (ia == ib) {
                out.ri.numerator = out.ri.numerator.mul_binomial(b, a, fld.one());
            } else if (ia < ib) {
                out.sign = -out.sign;
            }
            out.ri.denominators.push_back({b, a, fld.q_pow(-c.d(ia, ib))});
        }
    }
    return out;
}

template <class F>
typename F::Elem evaluate_word_pair(const F& fld, const CartanData& c, const Word& w,
                                    const ShuffleElement<typename F::Elem>& f, bool antipode,
                                    const PairingOptions& opts) {
    using K = typename F::Elem;
    require(w.sign == Sign::Plus && f.sign == Sign::Minus, ErrorCode::MixedSigns,
            "pairing takes a plus word against a minus element");
    if (w.hdeg(c.rank()) != f.hdeg) return fld.zero();
    int n = static_cast<int>(w.size());
    if (n == 0) return f.numer.coeff(ExpVec{});
    std::vector<int> ordering(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) ordering[static_cast<size_t>(a)] = w.letters[static_cast<size_t>(a)].first;
    WordIntegrand<F> wi = word_integrand(fld, c, ordering, f);
    // Fold in the monomial z_1^{d_1} ... z_n^{d_n}.
    ExpVec mono(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a) mono[static_cast<size_t>(a)] = w.letters[static_cast<size_t>(a)].second;
    wi.ri.numerator = wi.ri.numerator * LaurentPoly<K>::monomial(n, mono, fld.one());
    wi.ri.regime.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a)
        wi.ri.regime[static_cast<size_t>(a)] = antipode ? a : (n - 1 - a);
    K value = opts.cap_check ? constant_term_certified(fld, wi.ri) : constant_term(fld, wi.ri, 0);
    if (wi.sign < 0) value = -value;
    if (antipode && n % 2 == 1) value = -value;
    return value;
}

}  // namespace detail

/// <e-word, F> in the regime |z_1| >> ... >> |z_n|.
template <class F>
typename F::Elem pair_word(const F& fld, const CartanData& c, const Word& w,
                           const ShuffleElement<typename F::Elem>& f,
                           const PairingOptions& opts = {}) {
    return detail::evaluate_word_pair(fld, c, w, f, false, opts);
}

/// <e-word, S(F)> = (-1)^n times the same integrand in the reversed regime
/// |z_1| << ... << |z_n|; the antipode itself is never materialized.
template <class F>
typename F::Elem pair_word_antipode(const F& fld, const CartanData& c, const Word& w,
                                    const ShuffleElement<typename F::Elem>& f,
                                    const PairingOptions& opts = {}) {
    return detail::evaluate_word_pair(fld, c, w, f, true, opts);
}

/// Gram matrix of a word test family against a subspace basis, with the rank
/// tracked incrementally. Entries come from the windowed constant-term
/// engine: one extraction per (ordering, column) covers every admissible
/// letter-degree tuple at once.
template <class K>
struct GramComputation {
    SubspaceBasis<K> basis;       // columns
    std::vector<Word> words;      // the full test family (rows)
    Matrix<K> matrix;             // materialized entries (empty unless requested)
    size_t rank = 0;
    bool early_exited = false;
    DegreeVector shift_r;         // bookkeeping: the r of L^r, empty for bands
    DegreeVector n;
    long d = 0;
};

struct GramOptions {
    bool cap_check = true;
    bool early_exit = true;    // stop once the rank hits the column count
    bool materialize = false;  // keep all entries (disables early exit)
};

template <class F>
GramComputation<typename F::Elem> build_gram(const F& fld, const CartanData& c,
                                             SubspaceBasis<typename F::Elem> basis,
                                             const std::vector<int>& letter_floor,
                                             long degree_sum, const GramOptions& opts) {
    using K = typename F::Elem;
    GramComputation<K> out;
    out.n = basis.n;
    out.d = basis.d;
    out.words = enumerate_words(c, Sign::Plus, basis.n, degree_sum, letter_floor);
    size_t ncols = basis.dim();
    out.basis = std::move(basis);
    out.matrix = Matrix<K>(0, ncols);
    if (ncols == 0 || out.words.empty()) return out;
    int n = static_cast<int>(out.words.front().size());
    bool early_exit = opts.early_exit && !opts.materialize;

    RankTracker<K> tracker(ncols);
    // Words arrive grouped by ordering; one windowed extraction per
    // (ordering, column) serves the whole group.
    size_t g0 = 0;
    while (g0 < out.words.size()) {
        size_t g1 = g0;
        std::vector<int> ordering;
        for (const auto& [color, deg] : out.words[g0].letters) ordering.push_back(color);
        while (g1 < out.words.size()) {
            bool same = true;
            for (int a = 0; a < n; ++a)
                if (out.words[g1].letters[static_cast<size_t>(a)].first !=
                    ordering[static_cast<size_t>(a)]) {
                    same = false;
                    break;
                }
            if (!same) break;
            ++g1;
        }
        // Window of kept exponents: position a holds z_a^{-d_a}.
        CtWindow win;
        win.lo.resize(static_cast<size_t>(n));
        win.hi.resize(static_cast<size_t>(n));
        long floor_sum = 0;
        for (int a = 0; a < n; ++a) floor_sum += letter_floor[static_cast<size_t>(ordering[static_cast<size_t>(a)])];
        for (int a = 0; a < n; ++a) {
            long fa = letter_floor[static_cast<size_t>(ordering[static_cast<size_t>(a)])];
            long dmax = degree_sum - (floor_sum - fa);  // largest letter degree at position a
            win.lo[static_cast<size_t>(a)] = static_cast<int>(-dmax);
            win.hi[static_cast<size_t>(a)] = static_cast<int>(-fa);
        }
        std::vector<LaurentPoly<K>> tables;
        std::vector<int> col_signs;
        for (size_t col = 0; col < ncols; ++col) {
            detail::WordIntegrand<F> wi =
                detail::word_integrand(fld, c, ordering, ShuffleElement<K>{Sign::Minus, out.n,
                                                                           out.basis.elements[col]});
            wi.ri.regime.resize(static_cast<size_t>(n));
            for (int a = 0; a < n; ++a) wi.ri.regime[static_cast<size_t>(a)] = a;  // antipode regime
            LaurentPoly<K> table = constant_term_window(fld, wi.ri, win, 0);
            if (opts.cap_check) {
                LaurentPoly<K> again = constant_term_window(fld, wi.ri, win, 1);
                require(table == again, ErrorCode::CapInstability,
                        "windowed constant term changed under cap increase");
            }
            tables.push_back(std::move(table));
            col_signs.push_back(wi.sign);
        }
        int parity = (n % 2 == 1) ? -1 : 1;  // the (-1)^n of the antipode formula
        for (size_t widx = g0; widx < g1; ++widx) {
            ExpVec key(static_cast<size_t>(n), 0);
            for (int a = 0; a < n; ++a)
                key[static_cast<size_t>(a)] = -out.words[widx].letters[static_cast<size_t>(a)].second;
            std::vector<K> row(ncols, fld.zero());
            for (size_t col = 0; col < ncols; ++col) {
                K v = tables[col].coeff(key);
                if (col_signs[col] * parity < 0) v = -v;
                row[col] = v;
            }
            if (opts.materialize) {
                out.matrix.append_row(row);
                out.matrix.row_labels.push_back(out.words[widx].to_string());
            }
            tracker.offer(std::move(row));
            if (early_exit && tracker.rank() == ncols) {
                out.early_exited = true;
                break;
            }
        }
        if (early_exit && tracker.rank() == ncols) {
            out.early_exited = true;
            break;
        }
        g0 = g1;
    }
    out.rank = tracker.rank();
    return out;
}

/// Gram matrix for L^r at (n, d): columns from S_{<0|-n,d}, rows the
/// sigma_{-r}-shifted nonnegative words (letters d_a >= -r_{i_a}, sum -d),
/// entries <word, S(column)>.
template <class F>
GramComputation<typename F::Elem> gram_for_Lr(const F& fld, const CartanData& c,
                                              const DegreeVector& r, const DegreeVector& n, long d,
                                              const GramOptions& opts = {}) {
    detail::require_finite_type(c);
    auto basis = basis_minus_strictneg(fld, c, n, d);
    std::vector<int> floors(static_cast<size_t>(c.rank()));
    for (int i = 0; i < c.rank(); ++i) floors[static_cast<size_t>(i)] = -r[static_cast<size_t>(i)];
    auto out = build_gram(fld, c, std::move(basis), floors, -d, opts);
    out.shift_r = r;
    return out;
}

/// Gram matrix of the band-restricted pairing at minus vertical degree d:
/// columns from S^-_{>p1} cap S^-_{<p2} at (-n, d), rows the nonnegative
/// words with letter sum -d.
template <class F>
GramComputation<typename F::Elem> gram_for_key(const F& fld, const CartanData& c,
                                               const SlopeVector& p1, const SlopeVector& p2,
                                               const DegreeVector& n, long d,
                                               const GramOptions& opts = {}) {
    detail::require_finite_type(c);
    auto basis = basis_minus_band(fld, c, p1, p2, n, d);
    std::vector<int> floors(static_cast<size_t>(c.rank()), 0);
    return build_gram(fld, c, std::move(basis), floors, -d, opts);
}

}  // namespace loopchar
