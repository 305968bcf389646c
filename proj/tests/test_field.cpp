#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/field.hpp"

#include <random>

using namespace hecke;

TEST_CASE("golden constants") {
    const auto& a = gold_a();
    const auto& b = gold_b();
    CHECK(a - b == GoldenNum::frac(1, 2));
    CHECK(a * b == GoldenNum::frac(1, 4));
    CHECK(a + b == sqrt5() / GoldenNum(2));
    CHECK(sqrt5() * sqrt5() == GoldenNum(5));
    // 2a is the golden ratio
    GoldenNum phi = GoldenNum(2) * a;
    CHECK(phi * phi == phi + GoldenNum(1));
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"0", "1", "-3/4", "1/2+1/4*r5", "-r5", "7/3-2/5*r5", "1/2*r5"}) {
        GoldenNum x = GoldenNum::parse(s);
        CHECK(GoldenNum::parse(x.str()) == x);
    }
    CHECK(GoldenNum::parse("1/4+1/4*r5") == gold_a());
    CHECK_THROWS_AS(GoldenNum::parse("1/0"), std::exception);
    CHECK_THROWS_AS(GoldenNum::parse("2x"), ParseError);
    CHECK_THROWS_AS(GoldenNum::parse("r5/2"), ParseError);
}

TEST_CASE("parse_ab reads linear forms in a and b") {
    CHECK(parse_ab("3a+1/2") == GoldenNum(3) * gold_a() + GoldenNum::frac(1, 2));
    CHECK(parse_ab("-b/2+1/4") == -gold_b() / GoldenNum(2) + GoldenNum::frac(1, 4));
    CHECK(parse_ab("(2a+1)") == GoldenNum(2) * gold_a() + GoldenNum(1));
}

TEST_CASE("sign and ordering are exact") {
    GoldenNum tiny = GoldenNum::parse("-2207/987+r5");  // within 1e-6 of zero
    CHECK(tiny.sign() == (tiny.approx() > 0 ? 1 : -1));
    CHECK(GoldenNum::parse("9/4-r5").sign() == 1);
    CHECK(GoldenNum::parse("2-r5").sign() == -1);
    CHECK(gold_b() < gold_a());
    CHECK(abs(GoldenNum(-3)) == GoldenNum(3));
}

TEST_CASE("inverse and norm") {
    GoldenNum x = GoldenNum::parse("3/2-1/3*r5");
    CHECK(x * x.inv() == GoldenNum(1));
    CHECK(x * x.conj() == GoldenNum(x.norm()));
    CHECK_THROWS(GoldenNum().inv());
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-20, 20), n(1, 9);
    auto rnd = [&] { return GoldenNum(mpq_class(d(rng), n(rng)), mpq_class(d(rng), n(rng))); };
    for (int k = 0; k < 300; ++k) {
        GoldenNum x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(((x < y) || (y < x) || (x == y)));
    }
}

TEST_CASE("ZPhi agrees with GoldenNum") {
    ZPhi x(3, -2), y(-1, 5);
    CHECK((x * y).to_golden() == x.to_golden() * y.to_golden());
    CHECK(x.conj().to_golden() == x.to_golden().conj());
    CHECK(x.norm() == (x.to_golden() * x.to_golden().conj()).p().get_num().get_si());
    ZPhi back;
    REQUIRE(ZPhi::from_golden(x.to_golden(), back));
    CHECK(back == x);
    CHECK_FALSE(ZPhi::from_golden(GoldenNum::frac(1, 3), back));
    CHECK(ZPhi(-2, 1).sign() == -1);  // phi - 2 < 0
}
