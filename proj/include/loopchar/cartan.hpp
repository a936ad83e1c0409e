#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopchar/error.hpp"

namespace loopchar {

/// Integer tuple indexed by the color set I: horizontal degrees n, shift
/// vectors r, scaling patterns m all share this shape.
using DegreeVector = std::vector<int>;

long dot(const DegreeVector& a, const DegreeVector& b);
DegreeVector add(const DegreeVector& a, const DegreeVector& b);
DegreeVector sub(const DegreeVector& a, const DegreeVector& b);
bool leq(const DegreeVector& a, const DegreeVector& b);  // componentwise
bool is_zero(const DegreeVector& a);
DegreeVector unit_vector(int rank, int i);
long total(const DegreeVector& a);
std::string degvec_to_string(const DegreeVector& a);

/// Symmetrized Cartan data (d_ij): d_ii positive even with gcd 2, d_ij = d_ji
/// non-positive off the diagonal, and 2 d_ij / d_ii integral.
class CartanData {
  public:
    static CartanData validate(const std::vector<std::vector<int>>& d,
                               std::optional<std::string> tag = std::nullopt);
    /// Catalog entry ("A1", "A2", "A3", "B2", "G2").
    static CartanData from_catalog(const std::string& name);
    static std::vector<std::string> catalog_names();

    int rank() const { return static_cast<int>(d_.size()); }
    int d(int i, int j) const { return d_[i][j]; }
    const std::vector<std::vector<int>>& matrix() const { return d_; }
    const std::optional<std::string>& finite_type_tag() const { return tag_; }

    /// (m, n) = sum_ij m_i d_ij n_j, the symmetric bilinear form on the
    /// root lattice with (s^i, s^j) = d_ij.
    long bilinear(const DegreeVector& m, const DegreeVector& n) const;
    /// Cartan matrix entry 2 d_ij / d_ii.
    int cartan_entry(int i, int j) const { return 2 * d_[i][j] / d_[i][i]; }
    /// Wheel length n(i, j) = 1 - 2 d_ij / d_ii for i != j.
    int wheel_length(int i, int j) const { return 1 - cartan_entry(i, j); }

    /// Standard denominator factor count D(n) = sum_{i<j} n_i n_j.
    long denominator_count(const DegreeVector& n) const;

  private:
    CartanData(std::vector<std::vector<int>> d, std::optional<std::string> tag)
        : d_(std::move(d)), tag_(std::move(tag)) {}

    std::vector<std::vector<int>> d_;
    std::optional<std::string> tag_;
};

/// Positive roots of a finite-type Cartan datum, in the simple-root basis.
struct RootSystem {
    CartanData cartan;
    std::vector<DegreeVector> positive_roots;
};

/// Reflection closure of the simple roots. Throws NotFiniteType when the
/// closure fails to terminate within the iteration cap.
RootSystem positive_roots(const CartanData& c, int iteration_cap = 4096);

/// a_{g,n} for 0 < n <= bound, keyed by n.
struct ACoefficientTable {
    DegreeVector bound;
    std::map<DegreeVector, long> entries;

    long at(const DegreeVector& n) const {
        auto it = entries.find(n);
        return it == entries.end() ? 0 : it->second;
    }
};

/// Finite-type rule: a_{g,n} = 1 iff n is a positive root, 0 otherwise.
ACoefficientTable a_table(const CartanData& c, const DegreeVector& bound);

/// Recursion mode: a-values solving the graded-dimension product identity for
/// a supplied dim B_{0|n} table (see characters::a_from_b_dims).
ACoefficientTable a_table_from_dims(const std::map<DegreeVector, long>& b0_dims,
                                    const DegreeVector& bound);

}  // namespace loopchar
