#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopchar/laurent.hpp"
#include "loopchar/literals.hpp"
#include "loopchar/orbits.hpp"
#include "loopchar/shuffle.hpp"
#include "loopchar/wheel.hpp"

using namespace loopchar;

namespace {

const QqField qq;

LaurentPoly<Qq> poly(const VarLayout& l, const std::string& text) {
    return parse_laurent(qq, l, text);
}

// Brute-force orbit oracle: enumerate every exponent tuple in the box,
// filter, and deduplicate by per-color sorting.
std::vector<MonomialOrbit> orbit_oracle(const DegreeVector& n, long total,
                                        const std::vector<int>& lower, int upper,
                                        const std::vector<PrefixConstraint>& cs) {
    VarLayout layout(n);
    int nv = layout.count();
    std::set<MonomialOrbit> found;
    ExpVec e(static_cast<size_t>(nv), 0);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == nv) {
            long s = 0;
            for (int x : e) s += x;
            if (s != total) return;
            MonomialOrbit o = orbit_of(layout, e);
            for (const auto& con : cs)
                if (!con.satisfied_by(o)) return;
            found.insert(o);
            return;
        }
        int color = layout.color_of(idx);
        for (int v = lower[static_cast<size_t>(color)]; v <= upper; ++v) {
            e[static_cast<size_t>(idx)] = v;
            rec(idx + 1);
        }
        e[static_cast<size_t>(idx)] = 0;
    };
    rec(0);
    return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("symmetrize on the worked examples") {
    VarLayout a1(DegreeVector{2});
    CHECK(symmetrize(a1, poly(a1, "z[1,1]")) == poly(a1, "z[1,1] + z[1,2]"));
    CHECK(symmetrize(a1, poly(a1, "z[1,1]*z[1,2]")) == poly(a1, "2*z[1,1]*z[1,2]"));
    VarLayout a2(DegreeVector{1, 1});
    CHECK(symmetrize(a2, poly(a2, "z[1,1]")) == poly(a2, "z[1,1]"));
}

TEST_CASE("is_color_symmetric on the worked examples") {
    VarLayout a1(DegreeVector{2});
    CHECK(is_color_symmetric(a1, poly(a1, "z[1,1] + z[1,2]")));
    CHECK_FALSE(is_color_symmetric(a1, poly(a1, "z[1,1] - z[1,2]")));
    CHECK(is_color_symmetric(a1, poly(a1, "z[1,1]^2*z[1,2] + z[1,1]*z[1,2]^2")));
}

TEST_CASE("symmetrize output is color-symmetric; stabilizer scaling on orbits") {
    std::mt19937_64 rng(11);
    VarLayout layout(DegreeVector{3, 1});
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly<Qq> f(layout.count());
        for (int t = 0; t < 3; ++t) {
            ExpVec e(static_cast<size_t>(layout.count()));
            for (auto& x : e) x = static_cast<int>(rng() % 5) - 2;
            f.add_term(e, Qq(static_cast<long>(rng() % 5) - 2));
        }
        LaurentPoly<Qq> s = symmetrize(layout, f);
        CHECK(is_color_symmetric(layout, s));
        // Symmetrizing a symmetric function multiplies it by the group order.
        LaurentPoly<Qq> ss = symmetrize(layout, s);
        CHECK(ss == s.scaled(Qq(6)));  // 3! * 1!
    }
}

TEST_CASE("orbit_enumerate worked examples and oracle") {
    DegreeVector n{2};
    auto o1 = orbit_enumerate(n, 2, std::vector<int>{1}, {});
    REQUIRE(o1.size() == 1);
    CHECK(o1[0].exps == std::vector<std::vector<int>>{{1, 1}});
    auto o2 = orbit_enumerate(n, 3, std::vector<int>{1}, {});
    REQUIRE(o2.size() == 1);
    CHECK(o2[0].exps == std::vector<std::vector<int>>{{1, 2}});
    auto o3 = orbit_enumerate(n, 2, std::vector<int>{0}, {});
    REQUIRE(o3.size() == 2);
    CHECK(o3[0].exps == std::vector<std::vector<int>>{{0, 2}});
    CHECK(o3[1].exps == std::vector<std::vector<int>>{{1, 1}});

    CHECK_THROWS_AS(orbit_enumerate(n, 2, std::nullopt, {}), Error);

    // randomized agreement with the brute-force oracle
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        DegreeVector nn{static_cast<int>(rng() % 3) + 1, static_cast<int>(rng() % 2)};
        long total = static_cast<long>(rng() % 7);
        std::vector<int> lower{0, 0};
        std::vector<PrefixConstraint> cs;
        if (rng() % 2) {
            PrefixConstraint con;
            con.m = DegreeVector{1, 0};
            con.kind = PrefixConstraint::Kind::MaxAtMost;
            con.bound = static_cast<long>(rng() % 4);
            if (nn[0] > 0) cs.push_back(con);
        }
        auto fast = orbit_enumerate(nn, total, lower, cs);
        auto slow = orbit_oracle(nn, total, lower, 8, cs);
        CHECK(fast == slow);
    }
}

TEST_CASE("scaled_order worked examples") {
    VarLayout a1(DegreeVector{2});
    auto f = poly(a1, "z[1,1] + z[1,2]");
    CHECK(scaled_order(a1, f, {1}, ScaledEnd::MinAtZero) == 0);
    CHECK(scaled_order(a1, f, {2}, ScaledEnd::MinAtZero) == 1);
    auto g = poly(a1, "z[1,1]^2*z[1,2]^-1");
    CHECK(scaled_order(a1, g, {1}, ScaledEnd::MaxAtInfinity) == 2);
    CHECK_THROWS_AS(scaled_order(a1, LaurentPoly<Qq>(2), {1}, ScaledEnd::MinAtZero), Error);
}

TEST_CASE("scaled_order additivity for a monomial factor") {
    std::mt19937_64 rng(17);
    VarLayout layout(DegreeVector{2, 1});
    for (int trial = 0; trial < 20; ++trial) {
        ExpVec me(static_cast<size_t>(layout.count()));
        for (auto& x : me) x = static_cast<int>(rng() % 5) - 2;
        LaurentPoly<Qq> mono = LaurentPoly<Qq>::monomial(layout.count(), me, Qq(1));
        LaurentPoly<Qq> g(layout.count());
        for (int t = 0; t < 3; ++t) {
            ExpVec e(static_cast<size_t>(layout.count()));
            for (auto& x : e) x = static_cast<int>(rng() % 5) - 2;
            g.add_term(e, Qq(1 + static_cast<long>(rng() % 3)));
        }
        if (g.is_zero()) continue;
        DegreeVector m{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
        if (is_zero(m)) m = {1, 0};
        for (auto end : {ScaledEnd::MinAtZero, ScaledEnd::MaxAtInfinity}) {
            CHECK(scaled_order(layout, mono * g, m, end) ==
                  scaled_order(layout, mono, m, end) + scaled_order(layout, g, m, end));
        }
    }
}

TEST_CASE("binomial division is exact and validated") {
    VarLayout a1(DegreeVector{2});
    auto f = poly(a1, "z[1,1]^2 - z[1,2]^2");
    CHECK(f.div_binomial_exact(0, 1) == poly(a1, "z[1,1] + z[1,2]"));
    auto bad = poly(a1, "z[1,1]^2 + z[1,2]^2");
    CHECK_THROWS_AS(bad.div_binomial_exact(0, 1), Error);
}

TEST_CASE("wheel constraints shapes") {
    // one color: no wheels at all
    CartanData a1 = CartanData::from_catalog("A1");
    auto m1 = wheel_constraints(qq, a1, {3}, orbit_enumerate({3}, 3, std::vector<int>{0}, {}));
    CHECK(m1.rows() == 0);

    CartanData a2 = CartanData::from_catalog("A2");
    // n = (1,1): wheels need two same-color variables
    CHECK(wheel_instances(a2, {1, 1}).empty());
    // n = (2,1): the wheel at (w, w q^2, w q) is active
    auto inst = wheel_instances(a2, {2, 1});
    REQUIRE(inst.size() == 1);
    CHECK(inst[0].color_i == 0);
    CHECK(inst[0].color_j == 1);
    CHECK(inst[0].length == 2);
    auto orbits = orbit_enumerate({2, 1}, 3, std::vector<int>{1, 1}, {});
    auto m2 = wheel_constraints(qq, a2, {2, 1}, orbits);
    CHECK(m2.rows() > 0);
    // the constant polynomial fails the wheel: rho = 1 substituted is 1 != 0
    VarLayout layout(DegreeVector{2, 1});
    auto sub = wheel_substitute(qq, a2, layout, LaurentPoly<Qq>::constant(3, Qq(1)), inst[0]);
    CHECK_FALSE(sub.is_zero());
}

TEST_CASE("wheel constraint rows annihilate shuffle word images") {
    std::mt19937_64 rng(47);
    CartanData a2 = CartanData::from_catalog("A2");
    for (int trial = 0; trial < 6; ++trial) {
        Word w;
        w.sign = Sign::Plus;
        w.letters = {{0, static_cast<int>(rng() % 3)},
                     {0, static_cast<int>(rng() % 3)},
                     {1, static_cast<int>(rng() % 3)}};
        auto e = word_to_element(qq, a2, w);
        VarLayout layout = e.layout();
        std::set<MonomialOrbit> support;
        for (const auto& [exp, coef] : e.numer.terms()) support.insert(orbit_of(layout, exp));
        std::vector<MonomialOrbit> orbits(support.begin(), support.end());
        auto coords = orbit_coordinates(layout, e.numer, orbits);
        auto wm = wheel_constraints(qq, a2, e.hdeg, orbits);
        for (size_t r = 0; r < wm.rows(); ++r) {
            Qq s;
            for (size_t c = 0; c < wm.cols(); ++c) s += wm.at(r, c) * coords[c];
            CHECK(s == Qq::zero());
        }
    }
}

TEST_CASE("B2 wheel lengths follow the Cartan matrix") {
    CartanData b2 = CartanData::from_catalog("B2");
    CHECK(b2.wheel_length(0, 1) == 2);  // long-short
    CHECK(b2.wheel_length(1, 0) == 3);  // short-long
    auto inst = wheel_instances(b2, {2, 2});
    REQUIRE(inst.size() == 1);  // the (1,0) wheel needs n_2 >= 3
    CHECK(inst[0].length == 2);
}
