#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopchar/cartan.hpp"

namespace loopchar {

/// Truncation window for formal series in the symbols q^n (n in N^I) and v.
struct SeriesWindow {
    DegreeVector n_max;
    long d_lo = 0;
    long d_hi = 0;

    bool contains(const DegreeVector& n, long d) const {
        return leq(n, n_max) && d >= d_lo && d <= d_hi;
    }
};

/// Truncated integer-coefficient series indexed by (n, d); used both for
/// characters (convention q^{-n} v^d) and dimension series (q^n v^d) -- the
/// orientation of q is the caller's bookkeeping, the arithmetic is the same.
class CharacterSeries {
  public:
    explicit CharacterSeries(SeriesWindow w) : window_(std::move(w)) {}

    static CharacterSeries one(SeriesWindow w) {
        CharacterSeries s(std::move(w));
        s.set(DegreeVector(s.window_.n_max.size(), 0), 0, 1);
        return s;
    }

    const SeriesWindow& window() const { return window_; }
    const std::map<std::pair<DegreeVector, long>, long>& coeffs() const { return coeffs_; }

    long at(const DegreeVector& n, long d) const {
        auto it = coeffs_.find({n, d});
        return it == coeffs_.end() ? 0 : it->second;
    }
    void set(const DegreeVector& n, long d, long c) {
        if (c == 0)
            coeffs_.erase({n, d});
        else
            coeffs_[{n, d}] = c;
    }
    void add(const DegreeVector& n, long d, long c) { set(n, d, at(n, d) + c); }

    /// Multiply by (1 - q^{n0} v^{d0})^{-a}, truncated to the window; n0 must
    /// be nonzero so powers leave the window eventually.
    void mul_inv_factor(const DegreeVector& n0, long d0, long a);

    bool operator==(const CharacterSeries& o) const { return coeffs_ == o.coeffs_; }

  private:
    SeriesWindow window_;
    std::map<std::pair<DegreeVector, long>, long> coeffs_;
};

using DimSeries = CharacterSeries;

/// Refined character product, Kac-Moody form: over nonzero n in the a-table,
/// prod_{d=1}^{max(0, r.n)} (1 - q^{-n} v^d)^{-a_n}. The series is stored
/// with positive keys n; the q^{-n} orientation is implied.
CharacterSeries chi_product_atable(const ACoefficientTable& at, const DegreeVector& r,
                                   const DegreeVector& n_max, long d_max, bool refined);

/// Finite-type specialization over the positive roots.
CharacterSeries chi_product(const CartanData& c, const DegreeVector& r, const DegreeVector& n_max,
                            long d_max, bool refined);

/// RHS of the graded-dimension identity for S_{>= 0}: prod over nonzero n,
/// d >= 0 of (1 - q^n v^d)^{-a_n}, truncated.
CharacterSeries dims_geq0_product(const ACoefficientTable& at, const DegreeVector& n_max,
                                  long d_max);

}  // namespace loopchar
