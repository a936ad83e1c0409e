#include "loopchar/runner.hpp"

#include <chrono>

#include "loopchar/util.hpp"

namespace loopchar {

RunMode parse_mode(const std::string& s) {
    if (s == "exact") return RunMode::Exact;
    if (s == "modular") return RunMode::Modular;
    if (s == "both") return RunMode::Both;
    fail(ErrorCode::ParseError, "mode must be exact, modular or both");
}

namespace {

std::vector<ModField> draw_points(const ModPolicy& policy) {
    std::vector<ModField> points;
    std::mt19937_64 rng(policy.seed);
    for (std::uint64_t p : policy.primes) {
        for (int k = 0; k < policy.num_points; ++k) {
            int attempts = 0;
            while (true) {
                require(++attempts <= 32, ErrorCode::AllSpecializationsBad,
                        "no usable q-point; re-seed");
                std::uint64_t qv = 2 + rng() % (p - 3);
                try {
                    ModEval ev(p, qv, policy.order_guard, policy.max_vars);
                    points.emplace_back(ev);
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::BadSpecialization) continue;
                    throw;
                }
                break;
            }
        }
    }
    return points;
}

}  // namespace

VerificationReport run_verify_theorem(const CartanData& c, const DegreeVector& r,
                                      const DegreeVector& n_max, long d_max, RunMode mode,
                                      const ModPolicy& policy, bool cap_check) {
    GramOptions opts;
    opts.cap_check = cap_check;
    QqField qq;
    std::vector<ModField> points;
    if (mode != RunMode::Exact) points = draw_points(policy);

    std::string mode_name = mode == RunMode::Exact ? "exact"
                            : mode == RunMode::Modular ? "modular"
                                                       : "both";
    VerificationReport rep;
    rep.kind = "verify-theorem";
    rep.cartan = c.finite_type_tag().value_or("custom");
    rep.r = r;
    rep.n_max = n_max;
    rep.d_max = d_max;
    rep.mode = mode_name;
    CharacterSeries formula = chi_product(c, r, n_max, d_max, /*refined=*/true);

    struct CellKey {
        DegreeVector n;
        long d;
    };
    std::vector<CellKey> keys;
    for (const auto& n : degree_box(n_max))
        for (long d = 0; d <= d_max; ++d) keys.push_back({n, d});
    std::vector<CellVerdict> cells(keys.size());

    parallel_for(keys.size(), [&](size_t idx) {
        const auto& key = keys[idx];
        auto t0 = std::chrono::steady_clock::now();
        CellVerdict cell;
        cell.n = key.n;
        cell.d = key.d;
        cell.mode = mode_name;
        long exact_value = 0;
        bool have_exact = false;
        if (mode != RunMode::Modular) {
            exact_value = lr_dim(qq, c, r, key.n, key.d, opts);
            have_exact = true;
            cell.computed = exact_value;
        }
        if (mode != RunMode::Exact) {
            long best = 0;
            bool agree = true;
            bool first = true;
            long prev = 0;
            for (const auto& f : points) {
                long v = lr_dim(f, c, r, key.n, key.d, opts);
                best = std::max(best, v);
                if (!first && v != prev) agree = false;
                prev = v;
                first = false;
            }
            if (!agree && !have_exact) {
                // Specialization points disagree: settle the cell exactly.
                exact_value = lr_dim(qq, c, r, key.n, key.d, opts);
                have_exact = true;
                cell.mode = "modular+exact";
            }
            if (have_exact) {
                // Specialization can drop the wheel-kernel rank or an entry
                // rank; either way the exact value settles the cell.
                if (mode == RunMode::Both && best != exact_value)
                    cell.mode = "both(disagree->exact)";
                cell.computed = exact_value;
            } else {
                cell.computed = best;
            }
        }
        cell.formula = formula.at(key.n, key.d);
        cell.pass = cell.computed == cell.formula;
        auto t1 = std::chrono::steady_clock::now();
        cell.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        cells[idx] = std::move(cell);
    });

    for (auto& cell : cells) {
        rep.all_pass = rep.all_pass && cell.pass;
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

}  // namespace loopchar
