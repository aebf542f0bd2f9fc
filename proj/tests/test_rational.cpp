#include <doctest.h>

#include "binlen/rational.hpp"

using namespace binlen;

TEST_CASE("rational canonicalization and arithmetic") {
    Rational a(3, 6);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).den() == 3);

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 5) == Rational(1, 5));
    CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("inverse keeps the denominator positive") {
    Rational x(-3, 2);
    Rational inv = x.inverse();
    CHECK(inv == Rational(-2, 3));
    CHECK(inv.den() > 0);
    CHECK(x * inv == Rational(1));
}

TEST_CASE("parsing") {
    CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(*Rational::parse("7") == Rational(7));
    CHECK(*Rational::parse("6/4") == Rational(3, 2));
    CHECK(!Rational::parse("3/"));
    CHECK(!Rational::parse("a"));
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse(""));
}

TEST_CASE("integer helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(*sqrt_exact(Rational(4, 9)) == Rational(2, 3));
    CHECK(!sqrt_exact(Rational(2)));
    CHECK(!sqrt_exact(Rational(-4)));
    CHECK(*sqrt_exact(Int(49)) == 7);

    auto [sf8, s8] = squarefree_decompose(Int(8));
    CHECK(sf8 == 2);
    CHECK(s8 == 2);
    auto [sfn, sn] = squarefree_decompose(Int(-12));
    CHECK(sfn == -3);
    CHECK(sn == 2);
    CHECK(squarefree_decompose(Int(1)).first == 1);
    CHECK(squarefree_decompose(Int(210)).first == 210);
}
