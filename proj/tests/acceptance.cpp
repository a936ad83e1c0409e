// Acceptance suite: one line per criterion, zero tolerance throughout.
// Every constant-term evaluation below runs with cap certification enabled
// (caps and caps+1 must agree), so criterion 9 is enforced inside criteria
// 1-6 and re-checked explicitly on a sampled set at the end.

#include <chrono>
#include <cstdio>
#include <random>

#include "loopchar/characters.hpp"
#include "loopchar/runner.hpp"
#include "slope_oracle.hpp"

using namespace loopchar;

namespace {

const QqField qq;

int failures = 0;

void report(int criterion, bool pass, const std::string& what, double seconds) {
    std::printf("CRITERION %d: %s — %s (%.2fs)\n", criterion, pass ? "PASS" : "FAIL",
                what.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <class Fn>
void run(int criterion, const std::string& what, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note = what;
    try {
        pass = fn();
    } catch (const std::exception& e) {
        note += std::string(" [exception: ") + e.what() + "]";
        pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    report(criterion, pass, note, std::chrono::duration<double>(t1 - t0).count());
}

long partitions_at_most(long d, long parts) {
    if (d == 0) return 1;
    if (parts == 0 || d < 0) return 0;
    return partitions_at_most(d - parts, parts) + partitions_at_most(d, parts - 1);
}

Word random_word(std::mt19937_64& rng, int rank, int len, int dspread) {
    Word w;
    w.sign = Sign::Plus;
    for (int a = 0; a < len; ++a)
        w.letters.emplace_back(static_cast<int>(rng() % rank),
                               static_cast<int>(rng() % (2 * dspread + 1)) - dspread);
    return w;
}

// Matched minus partner of a plus word: reversed letters with negated degrees,
// so the pairing has a chance to be nonzero.
Word matched_minus(const Word& w) {
    Word m;
    m.sign = Sign::Minus;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        m.letters.emplace_back(it->first, -it->second);
    return m;
}

bool check_gram_ranks(const CartanData& c, const DegreeVector& r, const DegreeVector& n, long d,
                      std::uint64_t seed, int& compared) {
    GramOptions opts;
    opts.materialize = true;
    opts.early_exit = false;
    auto gram = gram_for_Lr(qq, c, r, n, d, opts);
    if (gram.matrix.rows() == 0 || gram.matrix.cols() == 0) return true;
    size_t exact = rank_exact(gram.matrix);
    if (exact != gram.rank) return false;
    ModPolicy policy;
    policy.seed = seed;
    auto mod = rank_modular(gram.matrix, policy);
    ++compared;
    return mod.rank == exact;
}

}  // namespace

int main() {
    ModPolicy policy;
    policy.seed = 20260808;

    // 1. Refined character formula, A1, exact coefficients over the window.
    run(1, "A1 refined character, r in {-1,0,1,2,3}, n <= 6, d <= 8, exact", [&] {
        for (int r : {-1, 0, 1, 2, 3}) {
            auto rep = run_verify_theorem(CartanData::from_catalog("A1"), {r}, {6}, 8,
                                          RunMode::Exact, policy, /*cap_check=*/true);
            if (!rep.all_pass) return false;
        }
        return true;
    });

    // 2. A2 over four shift vectors, modular sweep plus exact spot checks.
    run(2, "A2 refined character, four r values, n <= (2,2), d <= 5, modular + exact spots", [&] {
        CartanData a2 = CartanData::from_catalog("A2");
        std::mt19937_64 rng(policy.seed);
        std::vector<DegreeVector> rs = {{1, 1}, {1, 0}, {2, 1}, {0, -1}};
        for (const auto& r : rs) {
            auto rep = run_verify_theorem(a2, r, {2, 2}, 5, RunMode::Modular, policy, true);
            if (!rep.all_pass) return false;
            // the worked cell ((1,1), 2) = 2 under r = (1,1)
            if (r == DegreeVector{1, 1}) {
                bool seen = false;
                for (const auto& cell : rep.cells)
                    if (cell.n == DegreeVector{1, 1} && cell.d == 2) {
                        if (cell.computed != 2) return false;
                        seen = true;
                    }
                if (!seen) return false;
            }
            // five random exact confirmations against the modular values
            for (int k = 0; k < 5; ++k) {
                const auto& cell = rep.cells[rng() % rep.cells.size()];
                GramOptions opts;
                if (lr_dim(qq, a2, r, cell.n, cell.d, opts) != cell.computed) return false;
            }
        }
        return true;
    });

    // 3. B2 with unequal d_ii, exact.
    run(3, "B2 refined character, r = (1,1), n <= (2,2), d <= 4, exact", [&] {
        auto rep = run_verify_theorem(CartanData::from_catalog("B2"), {1, 1}, {2, 2}, 4,
                                      RunMode::Exact, policy, true);
        return rep.all_pass;
    });

    // 4. Graded dimensions of the slope >= 0 subalgebra against the product.
    run(4, "dim S_{>=0|n,d}: A1 (n <= 5, d <= 8) = partition counts; A2 (n <= (2,2), d <= 5)",
        [&] {
            CartanData a1 = CartanData::from_catalog("A1");
            auto rep1 = dims_slope_geq0(qq, a1, {5}, 8);
            if (!rep1.all_pass) return false;
            for (const auto& cell : rep1.cells) {
                if (is_zero(cell.n)) continue;
                if (cell.computed != partitions_at_most(cell.d, cell.n[0])) return false;
            }
            auto rep2 = dims_slope_geq0(qq, CartanData::from_catalog("A2"), {2, 2}, 5);
            return rep2.all_pass;
        });

    // 5. Slope-subalgebra dimensions, rational and quadratic-irrational slopes.
    run(5, "dim B_{p|n}: A1 p=1 all ones, A1 p=1/2 zero at n in {2,4}, A2 generic quad slope",
        [&] {
            CartanData a1 = CartanData::from_catalog("A1");
            auto ones = b_dim_series(qq, a1, SlopeVector::constant(1, Quad(1)), {4});
            if (!ones.all_pass) return false;
            for (const auto& cell : ones.cells)
                if (cell.computed != 1) return false;
            auto half = b_dim_series(qq, a1, SlopeVector::constant(1, Quad(mpq_class(1, 2))), {4});
            if (!half.all_pass) return false;
            for (const auto& cell : half.cells)
                if ((cell.n == DegreeVector{2} || cell.n == DegreeVector{4}) &&
                    cell.computed != 0)
                    return false;
            CartanData a2 = CartanData::from_catalog("A2");
            SlopeVector p({Quad(mpq_class(1), mpq_class(1)), Quad(mpq_class(1), mpq_class(-1))});
            auto verdict = is_generic(p, {6, 6});
            if (!verdict.generic || verdict.generator != DegreeVector{1, 1}) return false;
            auto quad = b_dim_series(qq, a2, p, {2, 2});
            if (!quad.all_pass) return false;
            for (const auto& cell : quad.cells) {
                long expect = (cell.n == DegreeVector{1, 1} || cell.n == DegreeVector{2, 2}) ? 1 : 0;
                if (cell.computed != expect) return false;
            }
            return true;
        });

    // 6. Pairing property suite, 100 random word/element pairs per type.
    run(6, "pairing properties: orthogonality, shift invariance, delta law, q^2+1, antipode sign",
        [&] {
            PairingOptions popts;  // cap_check on
            for (const char* name : {"A1", "A2", "B2"}) {
                CartanData c = CartanData::from_catalog(name);
                std::mt19937_64 rng(policy.seed + c.rank());
                int done = 0;
                while (done < 100) {
                    Word w = random_word(rng, c.rank(), 1 + static_cast<int>(rng() % 2), 2);
                    Word mf = matched_minus(w);
                    if (rng() % 3 == 0 && mf.letters.front().second < 2)
                        mf.letters.front().second += 1;  // force some mismatches
                    auto f = word_to_element(qq, c, mf);
                    Qq base = pair_word(qq, c, w, f, popts);
                    Qq base_s = pair_word_antipode(qq, c, w, f, popts);
                    // degree orthogonality
                    if (w.vdeg() + degrees(c, f).second != 0 || w.hdeg(c.rank()) != f.hdeg) {
                        if (!base.is_zero() || !base_s.is_zero()) return false;
                    }
                    // shift invariance of both pairings
                    DegreeVector r(static_cast<size_t>(c.rank()));
                    for (auto& x : r) x = static_cast<int>(rng() % 5) - 2;
                    Word ws = w;
                    for (auto& [color, deg] : ws.letters) deg += r[static_cast<size_t>(color)];
                    auto fs = shift(f, r);
                    if (pair_word(qq, c, ws, fs, popts) != base) return false;
                    if (pair_word_antipode(qq, c, ws, fs, popts) != base_s) return false;
                    ++done;
                }
                // <e_d, f_c> = delta_{d+c,0} and the n = 1 antipode sign
                for (int d = -2; d <= 2; ++d)
                    for (int cc = -2; cc <= 2; ++cc) {
                        Word w1{Sign::Plus, {{0, d}}};
                        auto f1 = word_to_element(qq, c, Word{Sign::Minus, {{0, cc}}});
                        Qq expect = d + cc == 0 ? Qq::one() : Qq::zero();
                        if (pair_word(qq, c, w1, f1, popts) != expect) return false;
                        if (pair_word_antipode(qq, c, w1, f1, popts) != -expect) return false;
                    }
            }
            CartanData a1 = CartanData::from_catalog("A1");
            auto ff = word_to_element(qq, a1, Word{Sign::Minus, {{0, 0}, {0, 0}}});
            Qq val = pair_word(qq, a1, Word{Sign::Plus, {{0, 0}, {0, 0}}}, ff, PairingOptions{});
            return val == Qq(QPoly(std::vector<mpz_class>{1, 0, 1}), QPoly::one());
        });

    // 7. Slope support conditions versus the direct xi-substitution oracle.
    run(7, "slope_test vs xi-substitution oracle, >= 100 elements per type and kind", [&] {
        for (const char* name : {"A1", "A2", "B2"}) {
            CartanData c = CartanData::from_catalog(name);
            std::mt19937_64 rng(policy.seed + 17 * c.d(0, 0));
            int done = 0;
            while (done < 100) {
                DegreeVector n(static_cast<size_t>(c.rank()), 0);
                long tot = 0;
                for (auto& x : n) {
                    x = static_cast<int>(rng() % 3);
                    tot += x;
                }
                if (tot == 0) continue;
                Sign sign = rng() % 2 ? Sign::Plus : Sign::Minus;
                auto e = testoracle::random_element(qq, rng, c, n, sign);
                SlopeVector p = testoracle::random_slope(rng, c.rank());
                for (auto kind :
                     {SlopeKind::Geq, SlopeKind::Gt, SlopeKind::Leq, SlopeKind::Lt}) {
                    if (slope_test(c, e, p, kind) !=
                        testoracle::slope_test_oracle(c, e, p, kind))
                        return false;
                }
                ++done;
            }
        }
        return true;
    });

    // 8. Modular ranks agree with exact ranks on the Gram matrices of 1-3.
    run(8, "rank_modular = rank_exact: A1 grams exhaustively, >= 20 random A2/B2 cells", [&] {
        int compared = 0;
        CartanData a1 = CartanData::from_catalog("A1");
        for (int r : {-1, 0, 1, 2, 3})
            for (int n = 1; n <= 6; ++n)
                for (long d = 1; d <= 8; ++d)
                    if (!check_gram_ranks(a1, {r}, {n}, d, policy.seed, compared)) return false;
        std::mt19937_64 rng(policy.seed);
        CartanData a2 = CartanData::from_catalog("A2");
        CartanData b2 = CartanData::from_catalog("B2");
        std::vector<DegreeVector> rs = {{1, 1}, {1, 0}, {2, 1}, {0, -1}};
        int sampled = 0;
        while (sampled < 20) {
            bool use_b2 = rng() % 2 == 0;
            const CartanData& c = use_b2 ? b2 : a2;
            DegreeVector r = use_b2 ? DegreeVector{1, 1} : rs[rng() % rs.size()];
            DegreeVector n{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
            if (is_zero(n)) continue;
            long d = 1 + static_cast<long>(rng() % (use_b2 ? 4 : 5));
            int before = sampled;
            if (!check_gram_ranks(c, r, n, d, policy.seed + sampled, sampled)) return false;
            if (sampled == before) continue;  // empty matrix; draw again
        }
        return compared > 0;
    });

    // 9. Cap stability: re-evaluate a sampled family at caps, caps+1, caps+2.
    run(9, "constant-term cap stability under +1 and +2 on sampled pairings", [&] {
        for (const char* name : {"A1", "A2", "B2"}) {
            CartanData c = CartanData::from_catalog(name);
            std::mt19937_64 rng(policy.seed + 31 * c.rank());
            for (int trial = 0; trial < 20; ++trial) {
                Word w = random_word(rng, c.rank(), 1 + static_cast<int>(rng() % 2), 2);
                auto f = word_to_element(qq, c, matched_minus(w));
                std::vector<int> ordering;
                for (const auto& [color, deg] : w.letters) ordering.push_back(color);
                auto wi = detail::word_integrand(qq, c, ordering, f);
                ExpVec mono(w.letters.size(), 0);
                for (size_t a = 0; a < w.letters.size(); ++a) mono[a] = w.letters[a].second;
                wi.ri.numerator =
                    wi.ri.numerator *
                    LaurentPoly<Qq>::monomial(static_cast<int>(w.letters.size()), mono, Qq(1));
                wi.ri.regime.resize(w.letters.size());
                for (size_t a = 0; a < w.letters.size(); ++a)
                    wi.ri.regime[a] = static_cast<int>(a);
                Qq v0 = constant_term(qq, wi.ri, 0);
                Qq v1 = constant_term(qq, wi.ri, 1);
                Qq v2 = constant_term(qq, wi.ri, 2);
                if (!(v0 == v1 && v1 == v2)) return false;
            }
        }
        return true;
    });

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
