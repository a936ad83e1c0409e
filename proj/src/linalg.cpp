#include "loopchar/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace loopchar {

size_t rank_exact(const Matrix<Qq>& m) {
    size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators row by row (rank-preserving) to land in Z[q].
    std::vector<std::vector<QPoly>> a(rows, std::vector<QPoly>(cols));
    for (size_t r = 0; r < rows; ++r) {
        QPoly common = QPoly::one();
        for (size_t c = 0; c < cols; ++c) {
            const QPoly& den = m.at(r, c).den();
            QPoly g = QPoly::gcd(common, den);
            common = common * den.div_exact(g);
        }
        for (size_t c = 0; c < cols; ++c) {
            const Qq& v = m.at(r, c);
            a[r][c] = v.num() * common.div_exact(v.den());
        }
    }
    // Bareiss one-step fraction-free elimination; divisions by the previous
    // pivot are exact. Pivot choice favors the smallest polynomial.
    QPoly prev = QPoly::one();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t best = rows;
        long best_size = 0;
        for (size_t r = rank; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            long sz = a[r][c].degree();
            if (best == rows || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        std::swap(a[rank], a[best]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t j = c + 1; j < cols; ++j)
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]).div_exact(prev);
            a[r][c] = QPoly::zero();
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::string ModRankReport::to_string() const {
    std::ostringstream os;
    os << "rank " << rank << (stable ? " (stable" : " (UNSTABLE");
    os << " across " << points.size() << " points";
    if (bad_points) os << ", " << bad_points << " re-drawn";
    os << ")";
    return os.str();
}

ModRankReport rank_modular(const Matrix<Qq>& m, const ModPolicy& policy) {
    ModRankReport report;
    std::mt19937_64 rng(policy.seed);
    bool any = false;
    for (std::uint64_t p : policy.primes) {
        for (int k = 0; k < policy.num_points; ++k) {
            // Draw q-points until one clears the order guard and all
            // denominators; give up after a fixed number of rejections.
            int attempts = 0;
            while (true) {
                require(++attempts <= 32, ErrorCode::AllSpecializationsBad,
                        "no usable q-point found; re-seed");
                std::uint64_t qv = 2 + rng() % (p - 3);
                try {
                    ModEval ev(p, qv, policy.order_guard, policy.max_vars);
                    Matrix<Fp> mm(m.rows(), m.cols(), Fp(0, p));
                    for (size_t r = 0; r < m.rows(); ++r)
                        for (size_t c = 0; c < m.cols(); ++c) mm.at(r, c) = specialize(m.at(r, c), ev);
                    size_t rk = rank_field(mm);
                    report.points.emplace_back(
                        "p=" + std::to_string(p) + ",q=" + std::to_string(qv), rk);
                    any = true;
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::BadSpecialization) {
                        ++report.bad_points;
                        continue;
                    }
                    throw;
                }
                break;
            }
        }
    }
    require(any, ErrorCode::AllSpecializationsBad, "every specialization was rejected");
    report.rank = 0;
    for (const auto& [desc, rk] : report.points) report.rank = std::max(report.rank, rk);
    for (const auto& [desc, rk] : report.points)
        if (rk != report.rank) report.stable = false;
    return report;
}

}  // namespace loopchar
