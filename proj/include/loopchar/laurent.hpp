#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "loopchar/cartan.hpp"
#include "loopchar/error.hpp"

namespace loopchar {

/// Exponent vector of a Laurent monomial, one slot per variable.
using ExpVec = std::vector<int>;

/// Flat indexing of the colored variables z_{i,a} for a fixed ambient degree
/// n: variables are laid out color-major, index = offset(i) + (a - 1).
class VarLayout {
  public:
    VarLayout() = default;
    explicit VarLayout(DegreeVector ambient) : ambient_(std::move(ambient)) {
        offsets_.resize(ambient_.size() + 1, 0);
        for (size_t i = 0; i < ambient_.size(); ++i)
            offsets_[i + 1] = offsets_[i] + ambient_[i];
    }

    const DegreeVector& ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(ambient_.size()); }
    int count() const { return offsets_.back(); }
    int offset(int color) const { return offsets_[static_cast<size_t>(color)]; }
    int index(int color, int slot0) const { return offset(color) + slot0; }
    int color_of(int idx) const {
        int c = 0;
        while (offsets_[static_cast<size_t>(c) + 1] <= idx) ++c;
        return c;
    }
    bool operator==(const VarLayout& o) const { return ambient_ == o.ambient_; }

  private:
    DegreeVector ambient_;
    std::vector<int> offsets_;
};

/// Sparse multivariate Laurent polynomial over a field element type K.
/// Zero coefficients are never stored; the term map is ordered, so iteration
/// and printing are deterministic.
template <class K>
class LaurentPoly {
  public:
    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, K c) {
        LaurentPoly p(nvars);
        p.add_term(ExpVec(static_cast<size_t>(nvars), 0), std::move(c));
        return p;
    }
    static LaurentPoly monomial(int nvars, const ExpVec& e, K c) {
        LaurentPoly p(nvars);
        p.add_term(e, std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, K>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const K& c) {
        require(static_cast<int>(e.size()) == nvars_, ErrorCode::InternalError,
                "exponent arity mismatch");
        accumulate(e, c);
    }

    LaurentPoly operator-() const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r(*this);
        r += o;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r(*this);
        check_arity(o);
        for (const auto& [e, c] : o.terms_) r.accumulate(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        check_arity(o);
        LaurentPoly r(nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                ExpVec e(e1);
                for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
                r.accumulate(e, c1 * c2);
            }
        }
        return r;
    }
    LaurentPoly scaled(const K& c) const {
        LaurentPoly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }
    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// Multiply by the binomial (z_u - c z_v).
    LaurentPoly mul_binomial(int u, int v, const K& c) const {
        LaurentPoly r(nvars_);
        for (const auto& [e, coef] : terms_) {
            ExpVec e1(e);
            e1[static_cast<size_t>(u)] += 1;
            r.accumulate(e1, coef);
            ExpVec e2(e);
            e2[static_cast<size_t>(v)] += 1;
            r.accumulate(e2, -(coef * c));
        }
        return r;
    }

    /// Exact division by (z_u - z_v); throws InternalError when the division
    /// leaves a remainder (the symmetrization cancellation check).
    LaurentPoly div_binomial_exact(int u, int v) const;

    /// Multiply every exponent of variable idx by adding shift.
    LaurentPoly shift_variable(int idx, int shift) const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            ExpVec e2(e);
            e2[static_cast<size_t>(idx)] += shift;
            r.terms_.emplace(e2, c);
        }
        return r;
    }

    /// Apply a permutation of variables: new exponent at perm[k] = old at k.
    LaurentPoly permuted(const std::vector<int>& perm) const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            ExpVec e2(static_cast<size_t>(nvars_), 0);
            for (size_t k = 0; k < e.size(); ++k) e2[static_cast<size_t>(perm[k])] = e[k];
            r.accumulate(e2, c);
        }
        return r;
    }

    long total_degree_of(const ExpVec& e) const {
        long s = 0;
        for (int x : e) s += x;
        return s;
    }
    /// Total degree of a homogeneous polynomial; throws Inhomogeneous or
    /// ZeroPolynomial when that is not well-defined.
    long homogeneous_degree() const {
        require(!terms_.empty(), ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
        long d = total_degree_of(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            require(total_degree_of(e) == d, ErrorCode::Inhomogeneous,
                    "polynomial is not homogeneous");
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = total_degree_of(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree_of(e) != d) return false;
        return true;
    }

    K coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    std::string to_string(const VarLayout& layout) const;

  private:
    void check_arity(const LaurentPoly& o) const {
        require(nvars_ == o.nvars_, ErrorCode::InternalError, "variable arity mismatch");
    }

    void accumulate(const ExpVec& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    std::map<ExpVec, K> terms_;
};

template <class K>
LaurentPoly<K> LaurentPoly<K>::div_binomial_exact(int u, int v) const {
    // Synthetic division in z_u: write P = sum_k A_k(other vars) z_u^k over a
    // window [lo, hi]; then P / (z_u - z_v) has z_u-coefficients B_{k-1} =
    // A_k + B_k z_v ... computed from the top down; remainder = A_lo + B_lo z_v
    // evaluated contribution must vanish.
    if (is_zero()) return *this;
    LaurentPoly quotient(nvars_);
    // Group terms by exponent of z_u, highest first.
    std::map<int, LaurentPoly, std::greater<int>> slices;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(u)];
        auto it = slices.find(k);
        if (it == slices.end()) it = slices.emplace(k, LaurentPoly(nvars_)).first;
        ExpVec e2(e);
        e2[static_cast<size_t>(u)] = 0;
        it->second.accumulate(e2, c);
    }
    int hi = slices.begin()->first;
    int lo = slices.rbegin()->first;
    LaurentPoly carry(nvars_);  // B_k z_v-part carried downward
    for (int k = hi; k > lo; --k) {
        LaurentPoly ak(nvars_);
        auto it = slices.find(k);
        if (it != slices.end()) ak = it->second;
        LaurentPoly bk = ak + carry;  // coefficient of z_u^{k-1} in quotient
        for (const auto& [e, c] : bk.terms()) {
            ExpVec e2(e);
            e2[static_cast<size_t>(u)] = k - 1;
            quotient.accumulate(e2, c);
        }
        carry = bk.shift_variable(v, 1);
    }
    LaurentPoly alo(nvars_);
    auto it = slices.find(lo);
    if (it != slices.end()) alo = it->second;
    LaurentPoly rem = alo + carry;
    require(rem.is_zero(), ErrorCode::InternalError,
            "binomial division left a remainder (cancellation failed)");
    return quotient;
}

/// Sum of f over all color-preserving variable permutations (stabilizers
/// counted with multiplicity, as in the unnormalized Sym).
template <class K>
LaurentPoly<K> symmetrize(const VarLayout& layout, const LaurentPoly<K>& f) {
    LaurentPoly<K> acc(f.nvars());
    std::vector<int> perm(static_cast<size_t>(f.nvars()));
    // Iterate the product of symmetric groups via odometer over per-color perms.
    std::vector<std::vector<int>> current;
    for (int i = 0; i < layout.rank(); ++i) {
        std::vector<int> p(static_cast<size_t>(layout.ambient()[i]));
        for (size_t k = 0; k < p.size(); ++k) p[k] = static_cast<int>(k);
        current.push_back(p);
    }
    while (true) {
        for (int i = 0; i < layout.rank(); ++i)
            for (size_t k = 0; k < current[static_cast<size_t>(i)].size(); ++k)
                perm[static_cast<size_t>(layout.index(i, static_cast<int>(k)))] =
                    layout.index(i, current[static_cast<size_t>(i)][k]);
        acc += f.permuted(perm);
        int c = layout.rank() - 1;
        while (c >= 0 && !std::next_permutation(current[static_cast<size_t>(c)].begin(),
                                                current[static_cast<size_t>(c)].end()))
            --c;
        if (c < 0) break;
        for (int j = c + 1; j < layout.rank(); ++j) {
            auto& p = current[static_cast<size_t>(j)];
            for (size_t k = 0; k < p.size(); ++k) p[k] = static_cast<int>(k);
        }
    }
    return acc;
}

/// True iff f is invariant under every adjacent same-color transposition.
template <class K>
bool is_color_symmetric(const VarLayout& layout, const LaurentPoly<K>& f) {
    for (int i = 0; i < layout.rank(); ++i) {
        for (int a = 0; a + 1 < layout.ambient()[i]; ++a) {
            std::vector<int> perm(static_cast<size_t>(f.nvars()));
            for (size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
            std::swap(perm[static_cast<size_t>(layout.index(i, a))],
                      perm[static_cast<size_t>(layout.index(i, a + 1))]);
            if (!(f.permuted(perm) == f)) return false;
        }
    }
    return true;
}

enum class ScaledEnd { MinAtZero, MaxAtInfinity };

/// Order in xi of f(xi z_{i1}, ..., xi z_{i m_i}, z_{i,m_i+1}, ...): the
/// extreme over monomials of the total exponent carried by the first m_i
/// slots of each color. Scaling sends distinct monomials to distinct
/// monomials, so no cancellation can move the extreme.
template <class K>
long scaled_order_slots(const VarLayout& layout, const LaurentPoly<K>& f, const DegreeVector& m,
                        ScaledEnd end, bool last_slots) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "scaled_order of zero");
    bool first = true;
    long extreme = 0;
    for (const auto& [e, c] : f.terms()) {
        long s = 0;
        for (int i = 0; i < layout.rank(); ++i) {
            int ni = layout.ambient()[static_cast<size_t>(i)];
            for (int a = 0; a < m[static_cast<size_t>(i)]; ++a) {
                int slot = last_slots ? ni - 1 - a : a;
                s += e[static_cast<size_t>(layout.index(i, slot))];
            }
        }
        if (first) {
            extreme = s;
            first = false;
        } else if (end == ScaledEnd::MinAtZero) {
            extreme = std::min(extreme, s);
        } else {
            extreme = std::max(extreme, s);
        }
    }
    return extreme;
}

template <class K>
long scaled_order(const VarLayout& layout, const LaurentPoly<K>& f, const DegreeVector& m,
                  ScaledEnd end) {
    long result = scaled_order_slots(layout, f, m, end, false);
#ifndef NDEBUG
    // Color symmetry makes the slot choice immaterial; recheck with the
    // opposite choice when the input is actually symmetric.
    if (is_color_symmetric(layout, f))
        require(result == scaled_order_slots(layout, f, m, end, true), ErrorCode::InternalError,
                "scaled_order depends on the slot choice");
#endif
    return result;
}

template <class K>
std::string LaurentPoly<K>::to_string(const VarLayout& layout) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")";
        for (int i = 0; i < layout.rank(); ++i) {
            for (int a = 0; a < layout.ambient()[i]; ++a) {
                int k = e[static_cast<size_t>(layout.index(i, a))];
                if (k == 0) continue;
                out += "*z[" + std::to_string(i + 1) + "," + std::to_string(a + 1) + "]";
                if (k != 1) out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

}  // namespace loopchar
