#include "loopchar/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace loopchar {

long dot(const DegreeVector& a, const DegreeVector& b) {
    require(a.size() == b.size(), ErrorCode::InternalError, "dot: size mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

DegreeVector add(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

DegreeVector sub(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool leq(const DegreeVector& a, const DegreeVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_zero(const DegreeVector& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

DegreeVector unit_vector(int rank, int i) {
    DegreeVector r(static_cast<size_t>(rank), 0);
    r[static_cast<size_t>(i)] = 1;
    return r;
}

long total(const DegreeVector& a) { return std::accumulate(a.begin(), a.end(), 0L); }

std::string degvec_to_string(const DegreeVector& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

CartanData CartanData::validate(const std::vector<std::vector<int>>& d,
                                std::optional<std::string> tag) {
    size_t n = d.size();
    require(n > 0, ErrorCode::PositivityViolation, "empty matrix");
    for (const auto& row : d)
        require(row.size() == n, ErrorCode::NonSymmetric, "matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            require(d[i][j] == d[j][i], ErrorCode::NonSymmetric,
                    "d_ij != d_ji at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    int g = 0;
    for (size_t i = 0; i < n; ++i) {
        require(d[i][i] > 0 && d[i][i] % 2 == 0, ErrorCode::PositivityViolation,
                "d_ii must be positive and even, got " + std::to_string(d[i][i]));
        g = std::gcd(g, d[i][i]);
    }
    require(g == 2, ErrorCode::GcdViolation, "gcd of diagonal entries is " + std::to_string(g));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            require(d[i][j] <= 0, ErrorCode::SignViolation,
                    "off-diagonal d_ij must be <= 0, got " + std::to_string(d[i][j]));
            require((2 * d[i][j]) % d[i][i] == 0, ErrorCode::IntegralityViolation,
                    "2*d_ij/d_ii is not an integer");
        }
    }
    return CartanData(d, std::move(tag));
}

CartanData CartanData::from_catalog(const std::string& name) {
    // One symmetrization per type, normalized to gcd(d_ii) = 2: simply laced
    // types take d_ii = 2; B2 takes diag (4, 2); G2 takes diag (6, 2).
    if (name == "A1") return validate({{2}}, name);
    if (name == "A2") return validate({{2, -1}, {-1, 2}}, name);
    if (name == "A3") return validate({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, name);
    if (name == "B2") return validate({{4, -2}, {-2, 2}}, name);
    if (name == "G2") return validate({{6, -3}, {-3, 2}}, name);
    fail(ErrorCode::ParseError, "unknown catalog type '" + name + "'");
}

std::vector<std::string> CartanData::catalog_names() { return {"A1", "A2", "A3", "B2", "G2"}; }

long CartanData::bilinear(const DegreeVector& m, const DegreeVector& n) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += static_cast<long>(m[i]) * d_[i][j] * n[j];
    return s;
}

long CartanData::denominator_count(const DegreeVector& n) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j) s += static_cast<long>(n[i]) * n[j];
    return s;
}

RootSystem positive_roots(const CartanData& c, int iteration_cap) {
    int rank = c.rank();
    std::set<DegreeVector> roots;
    std::vector<DegreeVector> frontier;
    for (int i = 0; i < rank; ++i) {
        DegreeVector e = unit_vector(rank, i);
        roots.insert(e);
        frontier.push_back(e);
    }
    int iterations = 0;
    while (!frontier.empty()) {
        require(++iterations <= iteration_cap, ErrorCode::NotFiniteType,
                "reflection closure did not terminate within the iteration cap");
        std::vector<DegreeVector> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank; ++i) {
                // s_i(v) = v - <v, alpha_i^vee> alpha_i with pairing 2(v,s^i)/d_ii.
                long pairing = 0;
                for (int j = 0; j < rank; ++j) pairing += static_cast<long>(v[j]) * c.d(j, i);
                long coeff = 2 * pairing / c.d(i, i);
                DegreeVector w = v;
                w[i] -= static_cast<int>(coeff);
                if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }) && !is_zero(w)) {
                    if (roots.insert(w).second) next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    RootSystem rs{c, std::vector<DegreeVector>(roots.begin(), roots.end())};
    return rs;
}

ACoefficientTable a_table(const CartanData& c, const DegreeVector& bound) {
    RootSystem rs = positive_roots(c);
    ACoefficientTable t;
    t.bound = bound;
    for (const auto& r : rs.positive_roots)
        if (leq(r, bound)) t.entries[r] = 1;
    return t;
}

namespace {

// All 0 <= n <= bound in lexicographic order.
void enumerate_box(const DegreeVector& bound, std::vector<DegreeVector>& out) {
    DegreeVector cur(bound.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t k = bound.size();
        while (k > 0) {
            --k;
            if (cur[k] < bound[k]) {
                ++cur[k];
                std::fill(cur.begin() + static_cast<long>(k) + 1, cur.end(), 0);
                break;
            }
            if (k == 0) return;
        }
    }
}

}  // namespace

ACoefficientTable a_table_from_dims(const std::map<DegreeVector, long>& b0_dims,
                                    const DegreeVector& bound) {
    require(!b0_dims.empty(), ErrorCode::MissingDimensionTable,
            "recursion mode needs a B_{0|n} dimension table");
    std::vector<DegreeVector> box;
    enumerate_box(bound, box);
    std::stable_sort(box.begin(), box.end(), [](const DegreeVector& a, const DegreeVector& b) {
        long ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    // Partial product of prod (1 - q^m)^{-a_m}, truncated to the bound box.
    std::map<DegreeVector, long> prod;
    prod[DegreeVector(bound.size(), 0)] = 1;
    ACoefficientTable t;
    t.bound = bound;
    auto dim_at = [&](const DegreeVector& n) -> long {
        if (is_zero(n)) return 1;
        auto it = b0_dims.find(n);
        require(it != b0_dims.end(), ErrorCode::MissingDimensionTable,
                "dimension table lacks entry at n=" + degvec_to_string(n));
        return it->second;
    };
    for (const auto& n : box) {
        if (is_zero(n)) continue;
        long have = 0;
        auto it = prod.find(n);
        if (it != prod.end()) have = it->second;
        long a = dim_at(n) - have;
        require(a >= 0, ErrorCode::NonIntegerSolution,
                "inconsistent dimension table: negative exponent at n=" + degvec_to_string(n));
        if (a != 0) {
            t.entries[n] = a;
            // Multiply the partial product by (1 - q^n)^{-a}: coefficient of
            // q^{kn} in that factor is C(a - 1 + k, k).
            std::map<DegreeVector, long> next;
            for (const auto& [m, cm] : prod) {
                DegreeVector acc = m;
                long binom = 1;
                for (long k = 0;; ++k) {
                    if (k > 0) {
                        binom = binom * (a - 1 + k) / k;
                        acc = add(acc, n);
                        if (!leq(acc, bound)) break;
                    }
                    next[acc] += cm * binom;
                }
            }
            prod = std::move(next);
        }
    }
    return t;
}

}  // namespace loopchar
