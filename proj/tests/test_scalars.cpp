#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopchar/literals.hpp"
#include "loopchar/modfield.hpp"
#include "loopchar/qq.hpp"

using namespace loopchar;

namespace {

Qq random_qq(std::mt19937_64& rng) {
    auto small_poly = [&](bool nonzero) {
        QPoly p;
        do {
            std::vector<mpz_class> c;
            int deg = static_cast<int>(rng() % 4);
            for (int k = 0; k <= deg; ++k)
                c.emplace_back(static_cast<long>(rng() % 7) - 3);
            p = QPoly(std::move(c));
        } while (nonzero && p.is_zero());
        return p;
    };
    return Qq(small_poly(false), small_poly(true));
}

}  // namespace

TEST_CASE("qq arithmetic on the worked examples") {
    Qq a = parse_qq("(q^2-1)/q");
    CHECK(a + Qq::zero() == a);
    CHECK(parse_qq("(q^2-1)/(q-1)") == parse_qq("q+1"));
    // zeta numerator constant for d_ii = 2 lives in Q(q)
    CHECK(Qq::q_power(-2) == parse_qq("1/q^2"));
    CHECK(Qq::q_power(-2) * Qq::q_power(2) == Qq::one());
}

TEST_CASE("canonical form is unique") {
    // (2q^2-2)/(2q-2) = q+1
    Qq a(QPoly(std::vector<mpz_class>{-2, 0, 2}), QPoly(std::vector<mpz_class>{-2, 2}));
    CHECK(a == parse_qq("q+1"));
    CHECK(a.den().is_one());
    // denominator sign normalization
    Qq b(QPoly(1), QPoly(std::vector<mpz_class>{0, -1}));
    CHECK(b == -Qq::q_power(-1));
}

TEST_CASE("field laws on random triples") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Qq a = random_qq(rng), b = random_qq(rng), c = random_qq(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inv() == Qq::one());
            CHECK((b / a) * a == b);
        }
        CHECK(a - a == Qq::zero());
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Qq::one() / Qq::zero(), Error);
    CHECK_THROWS_AS(Qq::zero().inv(), Error);
}

TEST_CASE("specialize on the worked examples") {
    ModEval ev(2147483647ull, 5, 16);
    CHECK(specialize(parse_qq("q+1"), ev).value() == 6);
    CHECK_THROWS_AS(specialize(parse_qq("1/(q-5)"), ev), Error);
    // (q^2-1)/q at q = 2 mod 7: 3 * 2^{-1} = 3 * 4 = 12 = 5
    ModField f7(7, 2);
    CHECK(parse_qq("(q^2-1)/q").num().eval_mod(2, 7) == 3);
    Fp v = f7.from_int(3) * f7.q_pow(-1);
    CHECK(v.value() == 5);
}

TEST_CASE("specialize is a ring homomorphism on random pairs") {
    std::mt19937_64 rng(7);
    ModEval ev(2147483647ull, 1234577, 64);
    for (int trial = 0; trial < 40; ++trial) {
        Qq a = random_qq(rng), b = random_qq(rng);
        Fp sa, sb;
        try {
            sa = specialize(a, ev);
            sb = specialize(b, ev);
        } catch (const Error&) {
            continue;  // denominator vanished at the point; redraw
        }
        CHECK(specialize(a * b, ev) == sa * sb);
        CHECK(specialize(a + b, ev) == sa + sb);
    }
}

TEST_CASE("mod eval guards") {
    CHECK_THROWS_AS(ModEval(1009, 3, 8), Error);  // prime below 2^30
    CHECK_THROWS_AS(ModEval(2147483647ull, 1, 8), Error);  // order 1
    std::uint64_t p = 2147483647ull;
    CHECK_THROWS_AS(ModEval(p, p - 1, 8), Error);  // order 2
    CHECK_THROWS_AS(ModEval(2147483646ull, 5, 8), Error);  // composite
    ModEval ok(p, 7, 64);
    std::uint64_t x = 1;
    for (long k = 1; k <= ok.order_guard(); ++k) {
        x = modarith::mul(x, ok.q_value(), p);
        CHECK(x != 1);
    }
}
