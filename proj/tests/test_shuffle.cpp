#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopchar/literals.hpp"
#include "loopchar/shuffle.hpp"

using namespace loopchar;

namespace {

const QqField qq;

Word random_word(std::mt19937_64& rng, int rank, Sign sign, int len, int dspread) {
    Word w;
    w.sign = sign;
    for (int a = 0; a < len; ++a)
        w.letters.emplace_back(static_cast<int>(rng() % rank),
                               static_cast<int>(rng() % (2 * dspread + 1)) - dspread);
    return w;
}

}  // namespace

TEST_CASE("zeta factors") {
    CartanData a1 = CartanData::from_catalog("A1");
    CHECK(zeta_factor(a1, 0, 0).num_qexp == -2);
    CartanData a2 = CartanData::from_catalog("A2");
    CHECK(zeta_factor(a2, 0, 1).num_qexp == 1);
    // d_ij = 0 makes the factor trivial
    CartanData a1a1 = CartanData::validate({{2, 0}, {0, 2}});
    CHECK(zeta_factor(a1a1, 0, 1).is_one());
}

TEST_CASE("shuffle product worked examples") {
    CartanData a1 = CartanData::from_catalog("A1");
    auto e0 = one_letter_element(qq, 1, Sign::Plus, 0, 0);
    auto e1 = one_letter_element(qq, 1, Sign::Plus, 0, 1);
    VarLayout l2(DegreeVector{2});

    auto p00 = shuffle_product(qq, a1, e0, e0);
    CHECK(p00.numer == parse_laurent(qq, l2, "1 + q^-2"));

    auto p10 = shuffle_product(qq, a1, e1, e0);
    CHECK(p10.numer == parse_laurent(qq, l2, "z[1,1] + z[1,2]"));

    // the unit element of hdeg 0
    auto unit = unit_element(qq, 1, Sign::Plus);
    auto pu = shuffle_product(qq, a1, p10, unit);
    CHECK(pu.numer == p10.numer);
    CHECK(shuffle_product(qq, a1, unit, p10).numer == p10.numer);

    // e_0 * e_1 = q^{-2} (e_1 * e_0): the pairing and span tests lean on this
    auto p01 = shuffle_product(qq, a1, e0, e1);
    CHECK(p01.numer == p10.numer.scaled(Qq::q_power(-2)));
}

TEST_CASE("mixed signs are rejected") {
    CartanData a1 = CartanData::from_catalog("A1");
    auto e0 = one_letter_element(qq, 1, Sign::Plus, 0, 0);
    auto f0 = one_letter_element(qq, 1, Sign::Minus, 0, 0);
    CHECK_THROWS_AS(shuffle_product(qq, a1, e0, f0), Error);
}

TEST_CASE("word images on the worked examples") {
    CartanData a1 = CartanData::from_catalog("A1");
    auto e5 = word_to_element(qq, a1, parse_word("e[1,5]", 1));
    CHECK(e5.hdeg == DegreeVector{1});
    CHECK(degrees(a1, e5) == std::pair<DegreeVector, long>({1}, 5));

    VarLayout l2(DegreeVector{2});
    auto ff = word_to_element(qq, a1, parse_word("f[1,1] f[1,1]", 1));
    CHECK(ff.numer == parse_laurent(qq, l2, "(1+q^-2) * z[1,1]*z[1,2]"));

    auto emm = word_to_element(qq, a1, parse_word("e[1,-1] e[1,-1]", 1));
    CHECK(emm.numer == parse_laurent(qq, l2, "(1+q^-2) * z[1,1]^-1*z[1,2]^-1"));
}

TEST_CASE("degrees") {
    CartanData a1 = CartanData::from_catalog("A1");
    auto f3 = word_to_element(qq, a1, parse_word("f[1,3]", 1));
    auto [h, d] = degrees(a1, f3);
    CHECK(h == DegreeVector{-1});
    CHECK(d == 3);
    auto p10 = word_to_element(qq, a1, parse_word("e[1,1] e[1,0]", 1));
    CHECK(degrees(a1, p10) == std::pair<DegreeVector, long>({2}, 1));
}

TEST_CASE("shift automorphisms") {
    CartanData a1 = CartanData::from_catalog("A1");
    auto e0 = word_to_element(qq, a1, parse_word("e[1,0]", 1));
    auto e1 = word_to_element(qq, a1, parse_word("e[1,1]", 1));
    CHECK(shift(e0, {1}).numer == e1.numer);
    CHECK(shift(e0, {0}).numer == e0.numer);

    std::mt19937_64 rng(23);
    CartanData a2 = CartanData::from_catalog("A2");
    for (int trial = 0; trial < 10; ++trial) {
        Word w = random_word(rng, 2, Sign::Plus, 3, 2);
        auto e = word_to_element(qq, a2, w);
        DegreeVector r{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2};
        DegreeVector s{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2};
        CHECK(shift(shift(e, r), s).numer == shift(e, add(r, s)).numer);
        // vdeg moves by r . n on the plus side
        CHECK(degrees(a2, shift(e, r)).second == degrees(a2, e).second + dot(r, e.hdeg));
    }
}

TEST_CASE("shift is an algebra homomorphism on random word pairs") {
    std::mt19937_64 rng(29);
    CartanData a2 = CartanData::from_catalog("A2");
    for (int trial = 0; trial < 6; ++trial) {
        auto ea = word_to_element(qq, a2, random_word(rng, 2, Sign::Plus, 2, 1));
        auto eb = word_to_element(qq, a2, random_word(rng, 2, Sign::Plus, 1, 2));
        DegreeVector r{static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3) - 1};
        auto lhs = shift(shuffle_product(qq, a2, ea, eb), r);
        auto rhs = shuffle_product(qq, a2, shift(ea, r), shift(eb, r));
        CHECK(lhs.numer == rhs.numer);
    }
}

TEST_CASE("associativity of the shuffle product") {
    std::mt19937_64 rng(31);
    for (const char* name : {"A1", "A2"}) {
        CartanData c = CartanData::from_catalog(name);
        for (int trial = 0; trial < 5; ++trial) {
            auto x = one_letter_element(qq, c.rank(), Sign::Plus,
                                        static_cast<int>(rng() % c.rank()),
                                        static_cast<int>(rng() % 5) - 2);
            auto y = one_letter_element(qq, c.rank(), Sign::Plus,
                                        static_cast<int>(rng() % c.rank()),
                                        static_cast<int>(rng() % 5) - 2);
            auto z = one_letter_element(qq, c.rank(), Sign::Plus,
                                        static_cast<int>(rng() % c.rank()),
                                        static_cast<int>(rng() % 5) - 2);
            auto left = shuffle_product(qq, c, shuffle_product(qq, c, x, y), z);
            auto right = shuffle_product(qq, c, x, shuffle_product(qq, c, y, z));
            CHECK(left.numer == right.numer);
        }
    }
}

TEST_CASE("degree additivity under the product") {
    std::mt19937_64 rng(37);
    CartanData a2 = CartanData::from_catalog("A2");
    for (int trial = 0; trial < 8; ++trial) {
        auto ea = word_to_element(qq, a2, random_word(rng, 2, Sign::Plus, 2, 2));
        auto eb = word_to_element(qq, a2, random_word(rng, 2, Sign::Plus, 2, 2));
        auto p = shuffle_product(qq, a2, ea, eb);
        CHECK(degrees(a2, p).first == add(degrees(a2, ea).first, degrees(a2, eb).first));
        CHECK(degrees(a2, p).second == degrees(a2, ea).second + degrees(a2, eb).second);
    }
}

TEST_CASE("plus/minus products agree with reversed operand order") {
    std::mt19937_64 rng(41);
    CartanData a2 = CartanData::from_catalog("A2");
    for (int trial = 0; trial < 8; ++trial) {
        Word we = random_word(rng, 2, Sign::Plus, 3, 2);
        Word wf;
        wf.sign = Sign::Minus;
        wf.letters.assign(we.letters.rbegin(), we.letters.rend());
        CHECK(word_to_element(qq, a2, we).numer == word_to_element(qq, a2, wf).numer);
    }
}

TEST_CASE("word images are color-symmetric and wheel-satisfying") {
    std::mt19937_64 rng(43);
    for (const char* name : {"A2", "B2"}) {
        CartanData c = CartanData::from_catalog(name);
        for (int trial = 0; trial < 6; ++trial) {
            Word w = random_word(rng, 2, rng() % 2 ? Sign::Plus : Sign::Minus, 3, 2);
            auto e = word_to_element(qq, c, w);
            CHECK(is_color_symmetric(e.layout(), e.numer));
            CHECK(wheel_check(qq, c, e));
        }
    }
}

TEST_CASE("wheel_check worked examples") {
    CartanData a1 = CartanData::from_catalog("A1");
    auto any = word_to_element(qq, a1, parse_word("e[1,2] e[1,0]", 1));
    CHECK(wheel_check(qq, a1, any));  // no wheels in rank 1

    CartanData a2 = CartanData::from_catalog("A2");
    ShuffleElement<Qq> bad;
    bad.sign = Sign::Minus;
    bad.hdeg = {2, 1};
    bad.numer = LaurentPoly<Qq>::constant(3, Qq(1));
    CHECK_FALSE(wheel_check(qq, a2, bad));
}
