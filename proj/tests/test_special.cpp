#include <doctest.h>

#include <random>

#include "binlen/oracle.hpp"
#include "binlen/special.hpp"
#include "helpers.hpp"

using namespace binlen;
using binlen::testing::random_form;

namespace {

BinaryForm circle_power(int k) {
    return BinaryForm(2, {Rational(1), Rational(0), Rational(1)}).pow(k);
}

}  // namespace

TEST_CASE("cubic classification") {
    auto Q = FieldDescriptor::rationals();
    auto cube_sum = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(1)});
    auto res = cubic_length(cube_sum, Q);
    CHECK(res.exact);
    CHECK(res.lower == 2);
    REQUIRE(res.witness.has_value());
    CHECK(expand_representation(*res.witness) == cube_sum);

    auto x2y = BinaryForm(3, {Rational(0), Rational(3), Rational(0), Rational(0)});
    for (auto K : {Q, FieldDescriptor::quadratic(Int(-1)), FieldDescriptor::reals(),
                   FieldDescriptor::complexes()}) {
        auto r = cubic_length(x2y, K);
        CHECK(r.exact);
        CHECK(r.lower == 3);
    }

    // squarefree with three real roots: x(x-y)(x+y) = x^3 - xy^2
    auto split3 = BinaryForm(3, {Rational(1), Rational(0), Rational(-1), Rational(0)});
    auto rr = cubic_length(split3, FieldDescriptor::reals());
    CHECK(rr.exact);
    CHECK(rr.lower == 3);
    CHECK(cubic_length(split3, FieldDescriptor::complexes()).lower == 2);

    // (x+iy)^3 + (x-iy)^3 = 2x^3 - 6xy^2
    auto gauss = BinaryForm(3, {Rational(2), Rational(0), Rational(-6), Rational(0)});
    CHECK(cubic_length(gauss, Q).lower == 3);
    CHECK(cubic_length(gauss, FieldDescriptor::quadratic(Int(-1))).lower == 2);
    // three real factors: 2x(x^2 - 3y^2)
    CHECK(cubic_length(gauss, FieldDescriptor::reals()).lower == 3);

    auto cube = BinaryForm(3, {Rational(8), Rational(12), Rational(6), Rational(1)});
    CHECK(cubic_length(cube, Q).lower == 1);
}

TEST_CASE("top length detection") {
    auto pair = top_length_detect(BinaryForm::monomial(4, 1, Rational(4)));
    REQUIRE(pair.has_value());
    CHECK(pair->first == LinearForm(Rational(1), Rational(0)));
    CHECK(pair->second == LinearForm(Rational(0), Rational(1)));

    CHECK(!top_length_detect(BinaryForm(3, {Rational(1), Rational(0), Rational(0),
                                            Rational(1)}))
               .has_value());

    // (x+y)^3 (x-y)
    BinaryForm f = BinaryForm(1, {Rational(1), Rational(1)}).pow(3) *
                   BinaryForm(1, {Rational(1), Rational(-1)});
    auto pf = top_length_detect(f);
    REQUIRE(pf.has_value());
    CHECK(pf->first == LinearForm(Rational(1), Rational(1)));
    CHECK(pf->second == LinearForm(Rational(1), Rational(-1)));
    CHECK(min_length_over_C(f).r == 4);

    // pure powers are length 1, not d
    CHECK(!top_length_detect(BinaryForm(1, {Rational(1), Rational(1)}).pow(4)).has_value());
}

TEST_CASE("root-of-unity identities for x^k y^k") {
    CHECK(xkyk_identity_verify(1, Rational(1)));
    CHECK(xkyk_identity_verify(2, Rational(1)));
    CHECK(xkyk_identity_verify(3, Rational(2)));
    CHECK(xkyk_identity_verify(5, Rational(1, 2)));
    CHECK(xkyk_identity_verify(8, Rational(-3)));
    CHECK_THROWS_AS(xkyk_identity_verify(2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(xkyk_identity_verify(9, Rational(1)), std::invalid_argument);
}

TEST_CASE("cyclotomic arithmetic basics") {
    CHECK(cyclotomic_polynomial(1) == UPoly{Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(4) == UPoly{Rational(1), Rational(0), Rational(1)});
    CHECK(cyclotomic_polynomial(6) == UPoly{Rational(1), Rational(-1), Rational(1)});
    // zeta_n^n = 1 after reduction
    for (int n : {4, 6, 10, 18}) {
        CHECK(CyclotomicElement::zeta_power(n, n) == CyclotomicElement::one(n));
        CHECK(CyclotomicElement::zeta_power(n, -1) ==
              CyclotomicElement::zeta_power(n, n - 1));
    }
}

TEST_CASE("circle power lengths") {
    auto Q = FieldDescriptor::rationals();
    auto r2 = circle_power_length(2, Q);
    CHECK(r2.exact);
    CHECK(r2.lower == 4);

    auto r3 = circle_power_length(3, Q);
    CHECK(r3.exact);
    CHECK(r3.lower == 4);
    REQUIRE(r3.witness.has_value());
    CHECK(expand_representation(*r3.witness) == circle_power(3));

    auto r7 = circle_power_length(7, FieldDescriptor::quadratic(Int(2)));
    CHECK(r7.exact);
    CHECK(r7.lower == 8);
    REQUIRE(r7.witness.has_value());
    CHECK(expand_representation(*r7.witness) == circle_power(7));

    auto r2q3 = circle_power_length(2, FieldDescriptor::quadratic(Int(3)));
    CHECK(r2q3.exact);
    CHECK(r2q3.lower == 3);

    auto r4 = circle_power_length(4, Q);
    CHECK(!r4.exact);
    CHECK(r4.lower == 6);
    CHECK(r4.upper == 8);

    auto r1 = circle_power_length(1, FieldDescriptor::quadratic(Int(-7)));
    CHECK(r1.exact);
    CHECK(r1.lower == 2);
}

TEST_CASE("gamma quartic values and identities") {
    CHECK(gamma_quartic(Int(38), Int(3), Int(2), Int(19)) == Int(276906) * Int(276906));

    // gamma(u^2, v^2, v, u) = (u^5 v - u v^5)^2, substituted symbolically
    BinaryForm a2 = BinaryForm::monomial(2, 0);  // u^2
    BinaryForm b2 = BinaryForm::monomial(2, 2);  // v^2
    BinaryForm mv = BinaryForm::monomial(1, 1);  // v
    BinaryForm nu = BinaryForm::monomial(1, 0);  // u
    BinaryForm lhs1 =
        Rational(4) * (a2.pow(3) * b2 * mv.pow(4)) +
        (b2.pow(4) - Rational(6) * (a2.pow(2) * b2.pow(2)) - Rational(3) * a2.pow(4)) *
            (mv.pow(2) * nu.pow(2)) +
        Rational(4) * (a2.pow(3) * b2 * nu.pow(4));
    BinaryForm rhs1 =
        (BinaryForm::monomial(6, 1) - BinaryForm::monomial(6, 5)) *
        (BinaryForm::monomial(6, 1) - BinaryForm::monomial(6, 5));
    CHECK(lhs1 == rhs1);

    // gamma(uv, u^2-uv+v^2, 1, 1) = (u-v)^6 (u+v)^2
    BinaryForm a = BinaryForm(2, {Rational(0), Rational(1), Rational(0)});       // uv
    BinaryForm b = BinaryForm(2, {Rational(1), Rational(-1), Rational(1)});      // u^2-uv+v^2
    BinaryForm gamma_sym = Rational(8) * (a.pow(3) * b) + b.pow(4) -
                           Rational(6) * (a.pow(2) * b.pow(2)) - Rational(3) * a.pow(4);
    BinaryForm expect = BinaryForm(1, {Rational(1), Rational(-1)}).pow(6) *
                        BinaryForm(1, {Rational(1), Rational(1)}).pow(2);
    CHECK(gamma_sym == expect);

    // gamma(1, 3, m, n) = 12 (m^2+n^2)^2 in (m, n)
    BinaryForm gmn = Rational(12) * (BinaryForm::monomial(4, 0) + BinaryForm::monomial(4, 4)) +
                     Rational(81 - 54 - 3) * BinaryForm::monomial(4, 2);
    CHECK(gmn == Rational(12) * BinaryForm(2, {Rational(1), Rational(0), Rational(1)}).pow(2));
}

TEST_CASE("gamma square searches") {
    auto w = gamma_square_search(Int(38), Int(3), 19);
    REQUIRE(w.has_value());
    CHECK(w->m == 2);
    CHECK(w->n == 19);
    CHECK(w->root == 276906);

    CHECK(!gamma_square_search(Int(1), Int(3), 100).has_value());
    CHECK(!gamma_square_search(Int(1), Int(2), 100).has_value());
    CHECK(descent_27_5_insoluble(100));
    CHECK_THROWS_AS(gamma_square_search(Int(1), Int(1), 10), std::invalid_argument);
}

TEST_CASE("two-power descent") {
    auto Q = FieldDescriptor::rationals();
    // (x + sqrt2 y)^4 + (x - sqrt2 y)^4 = 2x^4 + 24x^2y^2 + 8y^4
    BinaryForm f(4, {Rational(2), Rational(0), Rational(24), Rational(0), Rational(8)});
    auto des = two_power_descend(f, Q);
    REQUIRE(des.has_value());
    CHECK(des->first == Rational(8));
    CHECK(des->second.field() == FieldDescriptor::quadratic(Int(2)));
    CHECK(des->second.length() == 2);
    // summands are conjugate: swapping the quad part maps the term list to itself
    auto terms = des->second.terms();
    CHECK(terms[0].lambda == terms[1].lambda.conjugate());
    CHECK(terms[0].form.beta() == terms[1].form.beta().conjugate());

    auto cube_sum = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(1)});
    auto des2 = two_power_descend(cube_sum, Q);
    REQUIRE(des2.has_value());
    CHECK(des2->first == Rational(1));
    CHECK(des2->second.field() == Q);

    // (x+iy)^4 + (x-iy)^4 = 2x^4 - 12x^2y^2 + 2y^4
    BinaryForm g(4, {Rational(2), Rational(0), Rational(-12), Rational(0), Rational(2)});
    auto des3 = two_power_descend(g, Q);
    REQUIRE(des3.has_value());
    CHECK(des3->first == Rational(-4));
    CHECK(des3->second.field() == FieldDescriptor::quadratic(Int(-1)));

    // no honest two-term representation
    CHECK(!two_power_descend(BinaryForm::monomial(4, 1), Q).has_value());
    CHECK(!two_power_descend(BinaryForm::monomial(4, 0), Q).has_value());
}

TEST_CASE("power sum families") {
    BinaryForm g(2, {Rational(1), Rational(0), Rational(-2)});  // x^2 - 2y^2
    auto f = power_sum_family(g, 0, 4);
    CHECK(f == BinaryForm(4, {Rational(2), Rational(0), Rational(24), Rational(0),
                              Rational(8)}));
    // cross-check against the direct quadratic-field expansion
    auto K = FieldDescriptor::quadratic(Int(2));
    FieldElement s(Rational(0), Rational(1), K);
    auto direct = to_rational_form(expand_terms(
        {{FieldElement(Rational(1)), LinearForm(FieldElement(Rational(1)), s)},
         {FieldElement(Rational(1)),
          LinearForm(FieldElement(Rational(1)), FieldElement(Rational(0)) - s)}},
        4));
    REQUIRE(direct.has_value());
    CHECK(f == *direct);

    // cube roots of 2: e1 = e2 = 0, e3 = -2
    BinaryForm g3(3, {Rational(1), Rational(0), Rational(0), Rational(-2)});
    auto f3 = power_sum_family(g3, 1, 8);
    CHECK(min_length_over_C(f3).r == 3);

    CHECK_THROWS_AS(power_sum_family(BinaryForm(2, {Rational(1), Rational(2), Rational(1)}),
                                     0, 6),
                    std::invalid_argument);  // repeated roots
    CHECK_THROWS_AS(power_sum_family(BinaryForm(2, {Rational(2), Rational(0), Rational(1)}),
                                     0, 6),
                    std::invalid_argument);  // not monic
    CHECK_THROWS_AS(power_sum_family(g, 0, 3), std::invalid_argument);  // d too small
}

TEST_CASE("length dispatcher handles the gamma shapes") {
    auto Q = FieldDescriptor::rationals();
    // lambda = 38/3: length 3 via the diophantine witness
    BinaryForm f(4, {Rational(1), Rational(0), Rational(76), Rational(0), Rational(1)});
    auto res = length_over(f, Q, 8);
    CHECK(res.exact);
    CHECK(res.lower == 3);
    REQUIRE(res.witness.has_value());
    CHECK(expand_representation(*res.witness) == f);

    // lambda = 1/2: the descent excludes length 3
    BinaryForm g(4, {Rational(1), Rational(0), Rational(3), Rational(0), Rational(1)});
    auto res2 = length_over(g, Q, 8);
    CHECK(res2.exact);
    CHECK(res2.lower == 4);

    // lambda = 1/3 is (x^2+y^2)^2, routed through the circle-power theorem
    auto res3 = length_over(circle_power(2), Q, 8);
    CHECK(res3.exact);
    CHECK(res3.lower == 4);
}

TEST_CASE("cabinets") {
    auto Q = FieldDescriptor::rationals();
    auto R = FieldDescriptor::reals();
    auto C = FieldDescriptor::complexes();

    auto cab = cabinet(circle_power(2), {Q, R, C}, 8);
    CHECK(cab.summary == std::set<int>{3, 4});

    auto cube = BinaryForm(3, {Rational(1), Rational(0), Rational(0), Rational(0)});
    auto cab2 = cabinet(cube, {Q, R, C}, 8);
    CHECK(cab2.summary == std::set<int>{1});

    auto gauss = BinaryForm(3, {Rational(2), Rational(0), Rational(-6), Rational(0)});
    auto cab3 = cabinet(gauss, {Q, FieldDescriptor::quadratic(Int(-1)), R, C}, 8);
    CHECK(cab3.summary == std::set<int>{2, 3});
}

TEST_CASE("power matrix independence") {
    std::mt19937 rng(4242);
    auto forms = enumerate_forms(5);
    std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        int d = 2 + trial % 7;
        std::vector<LinearForm> chosen;
        while (static_cast<int>(chosen.size()) < d + 1) {
            auto lf = forms[pick(rng)];
            bool dup = false;
            for (const auto& c : chosen) dup = dup || c == lf;
            if (!dup) chosen.push_back(lf);
        }
        DenseMatrix<FieldElement> m(d + 1, d + 1);
        for (int k = 0; k <= d; ++k) {
            auto pc = chosen[k].power_coefficients(d);
            for (int j = 0; j <= d; ++j) m.at(j, k) = pc[j];
        }
        CHECK(rref_in_place(m).size() == static_cast<std::size_t>(d + 1));
    }
}
