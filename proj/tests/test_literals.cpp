#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopchar/literals.hpp"

using namespace loopchar;

namespace {
const QqField qq;
}

TEST_CASE("qq literals") {
    CHECK(parse_qq("q^2+1").to_string() == "q^2+1");
    CHECK(parse_qq("(q^2-1)/q") == Qq(QPoly(std::vector<mpz_class>{-1, 0, 1}),
                                      QPoly(std::vector<mpz_class>{0, 1})));
    CHECK(parse_qq("q^-2") == Qq::q_power(-2));
    CHECK(parse_qq("-3*q") == Qq(-3) * Qq::q_power(1));
    CHECK(parse_qq("2q") == Qq(2) * Qq::q_power(1));
    CHECK(parse_qq("1/2 + 1/2") == Qq::one());
    CHECK_THROWS_AS(parse_qq("q+"), Error);
    CHECK_THROWS_AS(parse_qq("x"), Error);
}

TEST_CASE("word literals") {
    Word w = parse_word("e[1,0] e[2,-3]", 2);
    CHECK(w.sign == Sign::Plus);
    REQUIRE(w.letters.size() == 2);
    CHECK(w.letters[0] == std::pair<int, int>{0, 0});
    CHECK(w.letters[1] == std::pair<int, int>{1, -3});
    CHECK(w.to_string() == "e[1,0] e[2,-3]");
    Word f = parse_word("f[1,5]", 1);
    CHECK(f.sign == Sign::Minus);
    CHECK_THROWS_AS(parse_word("e[3,0]", 2), Error);
    CHECK_THROWS_AS(parse_word("e[1,0] f[1,0]", 1), Error);
    CHECK_THROWS_AS(parse_word("", 1), Error);
}

TEST_CASE("polynomial literals") {
    VarLayout l(DegreeVector{2, 1});
    auto p = parse_laurent(qq, l, "q^-2 * z[1,1]^2 * z[2,1]^-1 - 3*z[1,2]");
    ExpVec e1{2, 0, -1};
    CHECK(p.coeff(e1) == Qq::q_power(-2));
    ExpVec e2{0, 1, 0};
    CHECK(p.coeff(e2) == Qq(-3));
    auto c = parse_laurent(qq, l, "(q+1)/(q-1)");
    CHECK(c.coeff(ExpVec{0, 0, 0}) == parse_qq("(q+1)/(q-1)"));
    CHECK_THROWS_AS(parse_laurent(qq, l, "z[3,1]"), Error);
    CHECK_THROWS_AS(parse_laurent(qq, l, "z[1,3]"), Error);
}

TEST_CASE("quad literals") {
    CHECK(parse_quad("3/2") == Quad(mpq_class(3, 2)));
    CHECK(parse_quad("1+1\xE2\x88\x9A""2") == Quad(mpq_class(1), mpq_class(1)));
    CHECK(parse_quad("1-sqrt2") == Quad(mpq_class(1), mpq_class(-1)));
    CHECK(parse_quad("rt2") == Quad::sqrt2());
    CHECK(parse_quad("-rt2") == -Quad::sqrt2());
    CHECK(parse_quad("5/3 sqrt2") == Quad(mpq_class(0), mpq_class(5, 3)));
    CHECK(parse_quad("-1/2+3/4sqrt2") == Quad(mpq_class(-1, 2), mpq_class(3, 4)));
}

TEST_CASE("slope literals") {
    CHECK(parse_slope("-inf", 2).kind() == SlopeVector::Kind::NegInf);
    CHECK(parse_slope("inf", 2).kind() == SlopeVector::Kind::PosInf);
    SlopeVector p = parse_slope("1+sqrt2,1-sqrt2", 2);
    REQUIRE(p.finite());
    CHECK(p[0] == Quad(mpq_class(1), mpq_class(1)));
    CHECK(p[1] == Quad(mpq_class(1), mpq_class(-1)));
    // scalar broadcast
    SlopeVector b = parse_slope("1/2", 3);
    CHECK(b.rank() == 3);
    CHECK(b[2] == Quad(mpq_class(1, 2)));
    CHECK_THROWS_AS(parse_slope("1,2,3", 2), Error);
}
