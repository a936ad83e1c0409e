#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "loopchar/error.hpp"
#include "loopchar/modfield.hpp"
#include "loopchar/qq.hpp"

namespace loopchar {

template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, K fill = K())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    K& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const K& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<K>& row) {
        require(cols_ == 0 || row.size() == cols_, ErrorCode::InternalError, "row size mismatch");
        if (cols_ == 0) cols_ = row.size();
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

  private:
    size_t rows_, cols_;
    std::vector<K> data_;
};

/// Incremental row-echelon rank tracker over a field: rows are reduced
/// against the stored pivots and kept when nonzero. Exact over any K with
/// canonical equality.
template <class K>
class RankTracker {
  public:
    explicit RankTracker(size_t cols) : cols_(cols) {}

    size_t rank() const { return pivots_.size(); }

    /// Reduce and absorb one row; returns true when the row increased the rank.
    bool offer(std::vector<K> row) {
        for (const auto& [col, prow] : pivots_) {
            const K& c = row[col];
            if (c.is_zero()) continue;
            K factor = c;  // pivot rows are normalized to pivot 1
            for (size_t j = 0; j < cols_; ++j) row[j] -= prow[j] * factor;
        }
        size_t lead = cols_;
        for (size_t j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead == cols_) return false;
        K inv = row[lead];
        for (size_t j = 0; j < cols_; ++j) row[j] = row[j] / inv;
        pivots_.emplace_back(lead, std::move(row));
        return true;
    }

  private:
    size_t cols_;
    std::vector<std::pair<size_t, std::vector<K>>> pivots_;
};

/// Rank over the fraction field by Gaussian elimination with canonical
/// (gcd-reduced) arithmetic; works for any field element type.
template <class K>
size_t rank_field(const Matrix<K>& m) {
    RankTracker<K> t(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        std::vector<K> row(m.cols());
        for (size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
        t.offer(std::move(row));
    }
    return t.rank();
}

/// Exact rank over Q(q): rows are cleared to integer-polynomial form, then
/// eliminated fraction-free (Bareiss one-step scheme), so every intermediate
/// entry stays in Z[q] and every division is exact.
size_t rank_exact(const Matrix<Qq>& m);

/// Basis of the right kernel over the coefficient field; each returned vector
/// is verified against the matrix before being handed back.
template <class K>
std::vector<std::vector<K>> nullspace(const Matrix<K>& m, const K& one) {
    size_t rows = m.rows(), cols = m.cols();
    // Gauss-Jordan to reduced row echelon form.
    std::vector<std::vector<K>> a(rows, std::vector<K>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        K inv = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] / inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            K f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= a[r][j] * f;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<K> v(cols, K());
        v[free_c] = one;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free_c];
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis) {
        for (size_t i = 0; i < rows; ++i) {
            K s = K();
            for (size_t c = 0; c < cols; ++c) s += m.at(i, c) * v[c];
            require(s.is_zero(), ErrorCode::InternalError, "nullspace vector fails m*v = 0");
        }
    }
    return basis;
}

/// Reproducible policy for the probabilistic rank path.
struct ModPolicy {
    int num_points = 2;
    std::vector<std::uint64_t> primes = {2147483647ull, 4294967291ull};
    std::uint64_t seed = 1;
    long order_guard = 64;
    int max_vars = 12;
};

struct ModRankReport {
    size_t rank = 0;
    bool stable = true;  // all specializations agreed
    std::vector<std::pair<std::string, size_t>> points;  // (description, rank per point)
    int bad_points = 0;  // specializations rejected for vanishing denominators

    std::string to_string() const;
};

/// Max rank over the drawn specializations (rank can only drop when
/// specializing, so the max is the best lower bound). Disagreement across
/// points is flagged, never averaged away. Throws AllSpecializationsBad when
/// every drawn point hits a denominator.
ModRankReport rank_modular(const Matrix<Qq>& m, const ModPolicy& policy);

}  // namespace loopchar
