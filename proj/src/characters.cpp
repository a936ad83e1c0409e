#include "loopchar/characters.hpp"

#include <chrono>

namespace loopchar {

std::vector<DegreeVector> degree_box(const DegreeVector& n_max) {
    std::vector<DegreeVector> out;
    DegreeVector cur(n_max.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t k = n_max.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (cur[k] < n_max[k]) {
                ++cur[k];
                std::fill(cur.begin() + static_cast<long>(k) + 1, cur.end(), 0);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

VerificationReport verify_cells(const CartanData& c, const DegreeVector& r,
                                const DegreeVector& n_max, long d_max, const std::string& mode,
                                const std::function<long(const DegreeVector&, long)>& dim_of) {
    VerificationReport rep;
    rep.kind = "verify-theorem";
    rep.cartan = c.finite_type_tag().value_or("custom");
    rep.r = r;
    rep.n_max = n_max;
    rep.d_max = d_max;
    rep.mode = mode;
    CharacterSeries formula = chi_product(c, r, n_max, d_max, /*refined=*/true);
    for (const auto& n : degree_box(n_max)) {
        for (long d = 0; d <= d_max; ++d) {
            auto t0 = std::chrono::steady_clock::now();
            CellVerdict cell;
            cell.n = n;
            cell.d = d;
            cell.computed = dim_of(n, d);
            cell.formula = formula.at(n, d);
            cell.pass = cell.computed == cell.formula;
            cell.mode = mode;
            auto t1 = std::chrono::steady_clock::now();
            cell.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rep.all_pass = rep.all_pass && cell.pass;
            rep.cells.push_back(std::move(cell));
        }
    }
    return rep;
}

}  // namespace loopchar
