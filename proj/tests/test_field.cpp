#include <doctest.h>

#include <random>

#include "binlen/field.hpp"

using namespace binlen;

namespace {

FieldElement elem(long a_num, long a_den, long b_num, long b_den, long d) {
    return FieldElement(Rational(a_num, a_den), Rational(b_num, b_den),
                        FieldDescriptor::quadratic(Int(d)));
}

}  // namespace

TEST_CASE("descriptor normalization and text syntax") {
    CHECK(FieldDescriptor::quadratic(Int(8)) == FieldDescriptor::quadratic(Int(2)));
    CHECK(FieldDescriptor::quadratic(Int(4)) == FieldDescriptor::rationals());
    CHECK(FieldDescriptor::quadratic(Int(-18)) == FieldDescriptor::quadratic(Int(-2)));
    CHECK_THROWS_AS(FieldDescriptor::quadratic(Int(0)), std::invalid_argument);

    CHECK(*FieldDescriptor::parse("Q") == FieldDescriptor::rationals());
    CHECK(*FieldDescriptor::parse("R") == FieldDescriptor::reals());
    CHECK(*FieldDescriptor::parse("C") == FieldDescriptor::complexes());
    CHECK(*FieldDescriptor::parse("Q(i)") == FieldDescriptor::quadratic(Int(-1)));
    CHECK(*FieldDescriptor::parse("Q(sqrt -2)") == FieldDescriptor::quadratic(Int(-2)));
    CHECK(FieldDescriptor::quadratic(Int(-2)).str() == "Q(sqrt -2)");
    CHECK(!FieldDescriptor::parse("Q(sqrt 0)"));
    CHECK(!FieldDescriptor::parse("K"));
}

TEST_CASE("tower ordering") {
    auto Q = FieldDescriptor::rationals();
    auto Q2 = FieldDescriptor::quadratic(Int(2));
    auto Qm2 = FieldDescriptor::quadratic(Int(-2));
    auto R = FieldDescriptor::reals();
    auto C = FieldDescriptor::complexes();
    CHECK(Q.embeds_in(Qm2));
    CHECK(Q.embeds_in(R));
    CHECK(Q2.embeds_in(R));
    CHECK(!Qm2.embeds_in(R));
    CHECK(Qm2.embeds_in(C));
    CHECK(R.embeds_in(C));
    CHECK(!C.embeds_in(R));
    CHECK(!Q2.embeds_in(Qm2));
}

TEST_CASE("quadratic element arithmetic") {
    auto x = elem(1, 1, 1, 1, 2);  // 1 + sqrt 2
    CHECK(x * x == elem(3, 1, 2, 1, 2));
    CHECK(x.conjugate().conjugate() == x);
    CHECK(x.norm() == Rational(-1));
    CHECK((x * x.inverse()).is_one());
    CHECK(x.pow(0).is_one());
    CHECK(x.pow(3) == elem(7, 1, 5, 1, 2));  // (1+s)^3 = 7 + 5s

    // elements of Q mix freely with any quadratic field
    CHECK(FieldElement(Rational(2)) * x == elem(2, 1, 2, 1, 2));
    CHECK_THROWS_AS(elem(1, 1, 1, 1, 2) + elem(1, 1, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(FieldElement(Rational(1), Rational(1), FieldDescriptor::reals()),
                    std::invalid_argument);
}

TEST_CASE("exact signs in real quadratic fields") {
    CHECK(elem(-1, 1, 1, 1, 2).sign() > 0);   // sqrt2 - 1
    CHECK(elem(1, 1, -1, 1, 2).sign() < 0);   // 1 - sqrt2
    CHECK(elem(3, 2, -1, 1, 2).sign() > 0);   // 3/2 - sqrt2 > 0
    CHECK(elem(7, 5, -1, 1, 2).sign() < 0);   // 7/5 - sqrt2 < 0
    CHECK_THROWS_AS(elem(1, 1, 1, 1, -2).sign(), std::domain_error);
}

TEST_CASE("ring axioms on pseudo-random elements") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> dist(-9, 9);
    auto K = FieldDescriptor::quadratic(Int(-5));
    auto rnd = [&] {
        return FieldElement(Rational(dist(rng), 1 + std::abs(dist(rng))),
                            Rational(dist(rng), 1 + std::abs(dist(rng))), K);
    };
    for (int i = 0; i < 200; ++i) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK(a.norm() == (a * a.conjugate()).rat_part());
        CHECK((a * a.conjugate()).quad_part().is_zero());
    }
}

TEST_CASE("field square roots") {
    CHECK(*field_sqrt(FieldElement(Rational(4, 9))) == FieldElement(Rational(2, 3)));
    CHECK(!field_sqrt(FieldElement(Rational(2))));
    CHECK(!field_sqrt(FieldElement(Rational(-4))));

    auto K2 = FieldDescriptor::quadratic(Int(2));
    auto two = FieldElement(Rational(2), Rational(0), K2);
    CHECK(*field_sqrt(two) == elem(0, 1, 1, 1, 2));
    CHECK(*field_sqrt(elem(3, 1, 2, 1, 2)) == elem(1, 1, 1, 1, 2));  // 3 + 2 sqrt2
    CHECK(!field_sqrt(elem(1, 1, 1, 1, 2)));
    CHECK(field_sqrt(FieldElement(Rational(0), Rational(0), K2))->is_zero());
    // root sign normalization: rat_part > 0, or quad_part > 0 when it vanishes
    CHECK(field_sqrt(elem(3, 1, -2, 1, 2))->rat_part() > Rational(0));
    CHECK(field_sqrt(two)->quad_part() > Rational(0));
}

TEST_CASE("square roots of squares always exist") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dist(-6, 6);
    for (long d : {2L, -1L, -5L, 3L}) {
        auto K = FieldDescriptor::quadratic(Int(d));
        for (int i = 0; i < 100; ++i) {
            FieldElement y(Rational(dist(rng), 1 + std::abs(dist(rng))),
                           Rational(dist(rng), 1 + std::abs(dist(rng))), K);
            auto root = field_sqrt(y * y);
            REQUIRE(root.has_value());
            CHECK(*root * *root == y * y);
        }
    }
}

TEST_CASE("is_square agrees with a brute-force candidate search") {
    // candidates y = (a + b sqrt(d)) / c with |a|, |b| <= 50, 1 <= c <= 50
    auto brute_is_square = [](long xa_n, long xa_d, long xb_n, long xb_d, long d) {
        for (long c = 1; c <= 50; ++c) {
            for (long a = -50; a <= 50; ++a) {
                for (long b = -50; b <= 50; ++b) {
                    // (a^2 + d b^2 + 2ab sqrt(d)) / c^2 == x
                    if ((a * a + d * b * b) * xa_d == xa_n * c * c &&
                        2 * a * b * xb_d == xb_n * c * c)
                        return true;
                }
            }
        }
        return false;
    };
    auto K = FieldDescriptor::quadratic(Int(2));
    struct Case {
        long an, ad, bn, bd;
    };
    const Case cases[] = {{3, 1, 2, 1}, {9, 4, 0, 1}, {1, 1, 1, 1},  {2, 1, 0, 1},
                          {17, 4, 3, 1}, {6, 1, 4, 1}, {-1, 1, 0, 1}, {11, 2, 2, 3}};
    for (const auto& c : cases) {
        FieldElement x(Rational(c.an, c.ad), Rational(c.bn, c.bd), K);
        CHECK(field_sqrt(x).has_value() == brute_is_square(c.an, c.ad, c.bn, c.bd, 2));
    }
}

TEST_CASE("coercion along the tower") {
    auto Qm2 = FieldDescriptor::quadratic(Int(-2));
    auto half = FieldElement(Rational(1, 2));
    auto moved = coerce(half, Qm2);
    REQUIRE(moved.has_value());
    CHECK(moved->field() == Qm2);
    CHECK(moved->rat_part() == Rational(1, 2));

    auto x = elem(1, 1, 1, 1, 2);
    CHECK(coerce(x, FieldDescriptor::reals()).has_value());
    CHECK(!coerce(elem(1, 1, 1, 1, -2), FieldDescriptor::reals()).has_value());
    CHECK(coerce(elem(1, 1, 1, 1, -2), FieldDescriptor::complexes()).has_value());
    CHECK(!coerce(x, FieldDescriptor::quadratic(Int(3))).has_value());
    CHECK(coerce(x, FieldDescriptor::quadratic(Int(8))).has_value());
}

TEST_CASE("square root rejects symbolic fields") {
    auto x = FieldElement(Rational(2));
    auto moved = coerce(x, FieldDescriptor::reals());
    REQUIRE(moved.has_value());
    CHECK(moved->field() == FieldDescriptor::rationals());  // representation unchanged
}
