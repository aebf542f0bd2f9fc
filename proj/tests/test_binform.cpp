#include <doctest.h>

#include <random>

#include "binlen/binform.hpp"
#include "helpers.hpp"

using namespace binlen;
using binlen::testing::random_form;

namespace {

BinaryForm phi() {
    return BinaryForm(5, {Rational(3), Rational(0), Rational(-20), Rational(0), Rational(10),
                          Rational(0)});
}

}  // namespace

TEST_CASE("raw and normalized coefficients round trip") {
    auto f = phi();
    auto a = f.normalized();
    CHECK(a == std::vector<Rational>{Rational(3), Rational(0), Rational(-2), Rational(0),
                                     Rational(2), Rational(0)});
    CHECK(BinaryForm::from_normalized(5, a) == f);

    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto g = random_form(rng, 1 + i % 8, -20, 20);
        CHECK(BinaryForm::from_normalized(g.degree(), g.normalized()) == g);
    }
}

TEST_CASE("linear form normalization") {
    CHECK(LinearForm(Rational(2, 3), Rational(4, 3)) == LinearForm(Rational(1), Rational(2)));
    CHECK(LinearForm(Rational(-2), Rational(4)) == LinearForm(Rational(1), Rational(-2)));
    CHECK(LinearForm(Rational(0), Rational(-5)) == LinearForm(Rational(0), Rational(1)));
    CHECK_THROWS_AS(LinearForm(Rational(0), Rational(0)), std::invalid_argument);

    auto K = FieldDescriptor::quadratic(Int(2));
    FieldElement s(Rational(0), Rational(1), K);
    // sqrt2 x + sqrt2 y is proportional to the rational direction x + y
    CHECK(LinearForm(s, s) == LinearForm(Rational(1), Rational(1)));
    // monic normalization for irrational directions
    LinearForm lf(s, FieldElement(Rational(1)));
    CHECK(lf.alpha().is_one());
    CHECK(lf.beta() == FieldElement(Rational(0), Rational(1, 2), K));
    // the dual vanishes at the coefficient direction of the original
    LinearForm d = lf.dual();
    CHECK((d.alpha() * lf.alpha() + d.beta() * lf.beta()).is_zero());
    CHECK(lf.dual().dual() == lf);
}

TEST_CASE("linear changes of variables") {
    auto x3 = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(0)});
    std::array<std::array<Rational, 2>, 2> id{{{Rational(1), Rational(0)},
                                               {Rational(0), Rational(1)}}};
    CHECK(apply_linear_change(x3, id) == x3);

    auto f = BinaryForm(2, {Rational(1), Rational(0), Rational(1)});  // x^2 + y^2
    std::array<std::array<Rational, 2>, 2> m{{{Rational(1), Rational(-1)},
                                              {Rational(1), Rational(1)}}};
    CHECK(apply_linear_change(f, m) ==
          BinaryForm(2, {Rational(2), Rational(0), Rational(2)}));

    auto xy = BinaryForm(2, {Rational(0), Rational(1), Rational(0)});
    std::array<std::array<Rational, 2>, 2> m2{{{Rational(1), Rational(1)},
                                               {Rational(1), Rational(-1)}}};
    CHECK(apply_linear_change(xy, m2) ==
          BinaryForm(2, {Rational(1), Rational(0), Rational(-1)}));

    std::array<std::array<Rational, 2>, 2> sing{{{Rational(1), Rational(1)},
                                                 {Rational(2), Rational(2)}}};
    CHECK_THROWS_AS(apply_linear_change(f, sing), std::invalid_argument);
}

TEST_CASE("apolarity operator") {
    // y(x^2+y^2) is the unique degree-3 apolar form of the quintic
    BinaryForm h(3, {Rational(0), Rational(1), Rational(0), Rational(1)});
    CHECK(apolar_apply(h, phi()).is_zero());

    // y (not x) annihilates x^3: the kernel vector of H_1(x^3) is (0, 1)
    auto x3 = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(apolar_apply(BinaryForm(1, {Rational(0), Rational(1)}), x3).is_zero());
    CHECK(!apolar_apply(BinaryForm(1, {Rational(1), Rational(0)}), x3).is_zero());

    // y^2 annihilates 3x^2y (kernel forces c0 = c1 = 0), x^2 does not
    auto f = BinaryForm(3, {Rational(0), Rational(3), Rational(0), Rational(0)});
    CHECK(apolar_apply(BinaryForm(2, {Rational(0), Rational(0), Rational(1)}), f).is_zero());
    CHECK(!apolar_apply(BinaryForm(2, {Rational(1), Rational(0), Rational(0)}), f).is_zero());

    CHECK_THROWS_AS(apolar_apply(phi(), x3), std::invalid_argument);
}

TEST_CASE("factorization over Q") {
    // (2x^2+y^2)(x^2+2y^2)
    BinaryForm f(4, {Rational(2), Rational(0), Rational(5), Rational(0), Rational(2)});
    auto fac = factor_over_Q(f);
    CHECK(fac.linear.empty());
    REQUIRE(fac.nonlinear.size() == 2);
    CHECK(fac.nonlinear[0].first ==
          BinaryForm(2, {Rational(1), Rational(0), Rational(2)}));
    CHECK(fac.nonlinear[1].first ==
          BinaryForm(2, {Rational(2), Rational(0), Rational(1)}));
    CHECK(fac.expand() == f);

    BinaryForm irr(2, {Rational(1), Rational(0), Rational(-2)});
    auto fac2 = factor_over_Q(irr);
    CHECK(fac2.linear.empty());
    REQUIRE(fac2.nonlinear.size() == 1);
    CHECK(fac2.nonlinear[0].second == 1);

    BinaryForm x2y(3, {Rational(0), Rational(1), Rational(0), Rational(0)});
    auto fac3 = factor_over_Q(x2y);
    REQUIRE(fac3.linear.size() == 2);
    CHECK(fac3.nonlinear.empty());
    int total = 0;
    for (auto& [lf, m] : fac3.linear) total += m;
    CHECK(total == 3);

    CHECK_THROWS_AS(factor_over_Q(BinaryForm::zero(2)), std::invalid_argument);
    std::mt19937 rng(1);
    CHECK_THROWS_AS(factor_over_Q(random_form(rng, 13, -2, 2)), std::invalid_argument);
}

TEST_CASE("factorization reproduces the input on random forms") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 500; ++i) {
        int degree = 1 + i % 8;
        auto f = random_form(rng, degree, -20, 20);
        auto fac = factor_over_Q(f);
        CHECK(fac.expand() == f);
        for (auto& [q, mult] : fac.nonlinear) CHECK(q.degree() >= 2);
    }
}

TEST_CASE("factorization finds quadratic and cubic factors without roots") {
    // (x^2-2y^2)(x^2-3y^2)
    BinaryForm f(4, {Rational(1), Rational(0), Rational(-5), Rational(0), Rational(6)});
    auto fac = factor_over_Q(f);
    CHECK(fac.nonlinear.size() == 2);
    // (x^3-2y^3)(x^3-3y^3), a sextic with no rational roots
    BinaryForm g(6, {Rational(1), Rational(0), Rational(0), Rational(-5), Rational(0),
                     Rational(0), Rational(6)});
    auto fac2 = factor_over_Q(g);
    CHECK(fac2.nonlinear.size() == 2);
    CHECK(fac2.expand() == g);
}

TEST_CASE("distinct splitting over named fields") {
    BinaryForm h(3, {Rational(0), Rational(1), Rational(0), Rational(1)});  // y(x^2+y^2)
    auto Qi = FieldDescriptor::quadratic(Int(-1));
    auto factors = splits_distinct(h, Qi);
    REQUIRE(factors.has_value());
    CHECK(factors->size() == 3);
    CHECK(!splits_distinct_over(h, FieldDescriptor::reals()));
    CHECK(splits_distinct_over(h, FieldDescriptor::complexes()));
    CHECK(!splits_distinct(h, FieldDescriptor::rationals()).has_value());

    BinaryForm g(4, {Rational(2), Rational(0), Rational(5), Rational(0), Rational(2)});
    auto gm2 = splits_distinct(g, FieldDescriptor::quadratic(Int(-2)));
    REQUIRE(gm2.has_value());
    CHECK(gm2->size() == 4);
    for (std::size_t i = 0; i < gm2->size(); ++i)
        for (std::size_t j = i + 1; j < gm2->size(); ++j) CHECK((*gm2)[i] != (*gm2)[j]);
    CHECK(!splits_distinct(g, FieldDescriptor::quadratic(Int(-3))).has_value());

    // repeated factors never split distinctly
    BinaryForm x2y(3, {Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK(!splits_distinct(x2y, Qi).has_value());
    CHECK(!splits_distinct_over(x2y, FieldDescriptor::complexes()));

    BinaryForm irr(2, {Rational(1), Rational(0), Rational(-2)});
    CHECK(!splits_distinct(irr, FieldDescriptor::rationals()).has_value());
    CHECK(splits_distinct(irr, FieldDescriptor::quadratic(Int(2))).has_value());
}

TEST_CASE("split factors multiply back to the input") {
    auto product_of = [](const std::vector<LinearForm>& factors) {
        std::vector<FieldElement> acc{FieldElement(Rational(1))};
        for (const auto& lf : factors) {
            std::vector<FieldElement> next(acc.size() + 1);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] = next[i] + acc[i] * lf.alpha();
                next[i + 1] = next[i + 1] + acc[i] * lf.beta();
            }
            acc = std::move(next);
        }
        return acc;
    };
    auto check_proportional = [&](const BinaryForm& h, const FieldDescriptor& K) {
        auto factors = splits_distinct(h, K);
        REQUIRE(factors.has_value());
        auto prod = product_of(*factors);
        // find the scale at the first nonzero coefficient
        std::size_t pivot = 0;
        while (prod[pivot].is_zero()) ++pivot;
        FieldElement scale = FieldElement(h.raw(static_cast<int>(pivot))) / prod[pivot];
        for (std::size_t i = 0; i < prod.size(); ++i)
            CHECK(prod[i] * scale == FieldElement(h.raw(static_cast<int>(i))));
    };
    check_proportional(BinaryForm(4, {Rational(2), Rational(0), Rational(5), Rational(0),
                                      Rational(2)}),
                       FieldDescriptor::quadratic(Int(-2)));
    check_proportional(BinaryForm(3, {Rational(0), Rational(1), Rational(0), Rational(1)}),
                       FieldDescriptor::quadratic(Int(-1)));
    check_proportional(BinaryForm(2, {Rational(1), Rational(0), Rational(-2)}),
                       FieldDescriptor::quadratic(Int(2)));
    check_proportional(BinaryForm(3, {Rational(6), Rational(-5), Rational(-2), Rational(1)}),
                       FieldDescriptor::rationals());  // (x-y)(2x+y)(3x-y)
}

TEST_CASE("squarefree predicate matches the C splitting rule on random forms") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto h = random_form(rng, 1 + i % 6, -8, 8);
        CHECK(splits_distinct_over(h, FieldDescriptor::complexes()) == is_squarefree(h));
    }
}

TEST_CASE("real root census") {
    CHECK(real_root_census(phi()).tau == 5);
    CHECK(real_root_census(BinaryForm(2, {Rational(1), Rational(0), Rational(1)})).tau == 0);
    auto x2y = BinaryForm(3, {Rational(0), Rational(1), Rational(0), Rational(0)});
    auto census = real_root_census(x2y);
    CHECK(census.tau == 3);
    CHECK(census.distinct_real == 2);
    // odd degree forms always have a real factor
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto f = random_form(rng, 3 + 2 * (i % 3), -9, 9);
        auto c = real_root_census(f);
        CHECK(c.tau >= 1);
        CHECK((f.degree() - c.tau) % 2 == 0);
    }
}

TEST_CASE("cubic invariants") {
    auto f = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(1)});
    auto [hessian, disc] = cubic_invariants(f);
    CHECK(hessian == BinaryForm(2, {Rational(0), Rational(-1), Rational(0)}));
    CHECK(disc == Rational(-27));

    auto g = BinaryForm(3, {Rational(0), Rational(3), Rational(0), Rational(0)});
    auto [gh, gd] = cubic_invariants(g);
    CHECK(gh == BinaryForm(2, {Rational(0), Rational(0), Rational(-1)}));
    CHECK(gd == Rational(0));

    auto x3 = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(0)});
    auto [xh, xd] = cubic_invariants(x3);
    CHECK(xh.is_zero());
    CHECK(xd == Rational(0));
    CHECK_THROWS_AS(cubic_invariants(phi()), std::invalid_argument);
}

TEST_CASE("cubics with rank-one Hankel sections are cubes") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> dist(-6, 6);
    // geometric normalized coefficients a_j = c g^j make the 2x4 Hankel
    // section rank one; such cubics must factor as perfect cubes
    for (int i = 0; i < 50; ++i) {
        Rational c(dist(rng)), g(dist(rng), 1 + std::abs(dist(rng)));
        if (c.is_zero()) continue;
        BinaryForm f = BinaryForm::from_normalized(
            3, {c, c * g, c * g * g, c * g * g * g});
        auto fac = factor_over_Q(f);
        REQUIRE(fac.linear.size() == 1);
        CHECK(fac.linear[0].second == 3);
        CHECK(fac.nonlinear.empty());
    }
    // the degenerate chain a0 = a1 = a2 = 0 is the cube y^3
    auto fac = factor_over_Q(BinaryForm::from_normalized(
        3, {Rational(0), Rational(0), Rational(0), Rational(5)}));
    REQUIRE(fac.linear.size() == 1);
    CHECK(fac.linear[0].second == 3);
}

TEST_CASE("structural detectors") {
    BinaryForm circle(2, {Rational(1), Rational(0), Rational(1)});
    auto c2 = detect_circle_power(Rational(3) * circle.pow(4));
    REQUIRE(c2.has_value());
    CHECK(c2->first == 4);
    CHECK(c2->second == Rational(3));
    CHECK(!detect_circle_power(phi()).has_value());

    auto mono = detect_monomial(BinaryForm::monomial(7, 2, Rational(5)));
    REQUIRE(mono.has_value());
    CHECK(std::get<0>(*mono) == 5);
    CHECK(std::get<1>(*mono) == 2);
    CHECK(std::get<2>(*mono) == Rational(5));
    CHECK(!detect_monomial(BinaryForm::monomial(3, 0)).has_value());

    CHECK(form_gcd(phi(), phi().derivative_x()).degree() == 0);
    BinaryForm sq = BinaryForm(1, {Rational(1), Rational(2)}).pow(2) *
                    BinaryForm(1, {Rational(1), Rational(0)});
    CHECK(form_gcd(sq, sq.derivative_x() * BinaryForm(1, {Rational(0), Rational(1)}))
              .degree() >= 1);
}
