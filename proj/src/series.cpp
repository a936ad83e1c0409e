#include "loopchar/series.hpp"

namespace loopchar {

void CharacterSeries::mul_inv_factor(const DegreeVector& n0, long d0, long a) {
    require(!is_zero(n0), ErrorCode::InternalError, "inverse factor needs nonzero n");
    if (a == 0) return;
    std::map<std::pair<DegreeVector, long>, long> next;
    for (const auto& [key, c] : coeffs_) {
        DegreeVector n = key.first;
        long d = key.second;
        long binom = 1;  // C(a - 1 + k, k)
        for (long k = 0;; ++k) {
            if (k > 0) {
                binom = binom * (a - 1 + k) / k;
                n = loopchar::add(n, n0);
                d += d0;
                if (!leq(n, window_.n_max)) break;
                if (d0 > 0 && d > window_.d_hi) break;
                if (d0 < 0 && d < window_.d_lo) break;
            }
            if (window_.contains(n, d)) next[{n, d}] += c * binom;
        }
    }
    coeffs_ = std::move(next);
}

CharacterSeries chi_product_atable(const ACoefficientTable& at, const DegreeVector& r,
                                   const DegreeVector& n_max, long d_max, bool refined) {
    SeriesWindow w{n_max, 0, d_max};
    CharacterSeries s = CharacterSeries::one(w);
    for (const auto& [n, a] : at.entries) {
        if (!leq(n, n_max)) continue;
        long top = std::max(0L, dot(r, n));
        if (refined) {
            for (long d = 1; d <= std::min(top, d_max); ++d) s.mul_inv_factor(n, d, a);
        } else {
            // v-collapsed: (1 - q^{-n})^{-a * max(0, r.n)} at v-degree 0.
            s.mul_inv_factor(n, 0, a * top);
        }
    }
    return s;
}

CharacterSeries chi_product(const CartanData& c, const DegreeVector& r, const DegreeVector& n_max,
                            long d_max, bool refined) {
    return chi_product_atable(a_table(c, n_max), r, n_max, d_max, refined);
}

CharacterSeries dims_geq0_product(const ACoefficientTable& at, const DegreeVector& n_max,
                                  long d_max) {
    SeriesWindow w{n_max, 0, d_max};
    CharacterSeries s = CharacterSeries::one(w);
    for (const auto& [n, a] : at.entries) {
        if (!leq(n, n_max)) continue;
        for (long d = 0; d <= d_max; ++d) s.mul_inv_factor(n, d, a);
    }
    return s;
}

}  // namespace loopchar
