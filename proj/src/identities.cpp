#include "binlen/identities.hpp"

#include <stdexcept>

#include "binlen/oracle.hpp"
#include "binlen/reallen.hpp"
#include "binlen/special.hpp"

namespace binlen {

namespace {

BinaryForm phi() { return BinaryForm(5, {Rational(3), Rational(0), Rational(-20), Rational(0), Rational(10), Rational(0)}); }

Representation::RawTerm term(FieldElement lambda, FieldElement alpha, FieldElement beta) {
    return Representation::RawTerm{std::move(lambda), std::move(alpha), std::move(beta)};
}

void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error(what);
}

void quintic_rational() {
    // 6 phi = 36 x^5 - 10 (x+y)^5 - 10 (x-y)^5 + (x+2y)^5 + (x-2y)^5
    auto rep = Representation::make(
        FieldDescriptor::rationals(),
        std::vector<Representation::RawTerm>{
            term(Rational(36), Rational(1), Rational(0)),
            term(Rational(-10), Rational(1), Rational(1)),
            term(Rational(-10), Rational(1), Rational(-1)),
            term(Rational(1), Rational(1), Rational(2)),
            term(Rational(1), Rational(1), Rational(-2))},
        Rational(6) * phi());
    check(expand_representation(rep) == Rational(6) * phi(), "quintic-rational expansion");
    assert_sign_rule(rep);
}

void quintic_gaussian() {
    // phi = x^5 + (x + iy)^5 + (x - iy)^5
    auto Qi = FieldDescriptor::quadratic(Int(-1));
    auto i = FieldElement(Rational(0), Rational(1), Qi);
    auto rep = Representation::make(
        Qi,
        std::vector<Representation::RawTerm>{
            term(Rational(1), Rational(1), Rational(0)),
            term(Rational(1), FieldElement(Rational(1)), i),
            term(Rational(1), FieldElement(Rational(1)), FieldElement(Rational(0)) - i)},
        phi());
    check(expand_representation(rep) == phi(), "quintic-gaussian expansion");
}

void quintic_sqrt_neg2() {
    // 24 phi = 4 (x + s y)^5 + 4 (x - s y)^5 + (2x + s y)^5 + (2x - s y)^5,
    // s = sqrt(-2)
    auto K = FieldDescriptor::quadratic(Int(-2));
    auto s = FieldElement(Rational(0), Rational(1), K);
    auto rep = Representation::make(
        K,
        std::vector<Representation::RawTerm>{
            term(Rational(4), FieldElement(Rational(1)), s),
            term(Rational(4), FieldElement(Rational(1)), FieldElement(Rational(0)) - s),
            term(Rational(1), FieldElement(Rational(2)), s),
            term(Rational(1), FieldElement(Rational(2)), FieldElement(Rational(0)) - s)},
        Rational(24) * phi());
    check(expand_representation(rep) == Rational(24) * phi(), "quintic-sqrt-neg2 expansion");
}

void cubic_three_term_family() {
    const std::pair<long, long> pairs[] = {{1, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 1},
                                           {1, 3}, {3, 2}, {2, 3}, {1, -1}, {5, 2}};
    for (auto [a, b] : pairs) {
        auto rep = e3reps_family(Rational(a), Rational(b));
        check(expand_representation(rep) == rep.target(),
              "three-term cubic family at a=" + std::to_string(a) + ", b=" + std::to_string(b));
        assert_sign_rule(rep);
    }
}

const std::vector<Rational>& family_parameters() {
    static const std::vector<Rational> rs = {
        Rational(0),      Rational(2),      Rational(-1),     Rational(-2),
        Rational(3),      Rational(-3),     Rational(5),      Rational(-5),
        Rational(7),      Rational(-7),     Rational(1, 2),   Rational(-1, 2),
        Rational(3, 2),   Rational(-3, 2),  Rational(5, 2),   Rational(2, 3),
        Rational(-2, 3),  Rational(4, 3),   Rational(-4, 3),  Rational(5, 3)};
    return rs;
}

void quartic_definite_family() {
    // (rx+y)^4 + (x+ry)^4 - (r^3+r)(x+y)^4
    //   = (r-1)^2 (r^2+r+1) (x^4 - (6r/(r^2+r+1)) x^2 y^2 + y^4)
    for (const Rational& r : family_parameters()) {
        BinaryForm lhs =
            BinaryForm(1, {r, Rational(1)}).pow(4) + BinaryForm(1, {Rational(1), r}).pow(4) -
            (r.pow(3) + r) * BinaryForm(1, {Rational(1), Rational(1)}).pow(4);
        Rational unit = (r - Rational(1)).pow(2) * (r * r + r + Rational(1));
        BinaryForm core(4, {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
        BinaryForm rhs = unit * core + (-Rational(6) * r * (r - Rational(1)).pow(2)) *
                                           BinaryForm::monomial(4, 2, Rational(1));
        check(lhs == rhs, "definite quartic family at r=" + r.str());
    }
}

void quartic_xy_family() {
    // (r^4+1)(x+y)^4 - (rx+y)^4 - (x+ry)^4
    //   = 4 (r-1)^2 (r^2+r+1) (x^3 y + psi(r) x^2 y^2 + x y^3)
    for (const Rational& r : family_parameters()) {
        BinaryForm lhs = (r.pow(4) + Rational(1)) *
                             BinaryForm(1, {Rational(1), Rational(1)}).pow(4) -
                         BinaryForm(1, {r, Rational(1)}).pow(4) -
                         BinaryForm(1, {Rational(1), r}).pow(4);
        Rational s = (r - Rational(1)).pow(2);
        BinaryForm rhs = Rational(4) * s * (r * r + r + Rational(1)) *
                             (BinaryForm::monomial(4, 1, Rational(1)) +
                              BinaryForm::monomial(4, 3, Rational(1))) +
                         Rational(6) * s * (Rational(1) + r).pow(2) *
                             BinaryForm::monomial(4, 2, Rational(1));
        check(lhs == rhs, "xy quartic family at r=" + r.str());
    }
}

void quartic_x2_identity() {
    // x^2 (2x^2 + 12 y^2) = (x+y)^4 + (x-y)^4 - 2 y^4
    auto rep = Representation::make(
        FieldDescriptor::rationals(),
        std::vector<Representation::RawTerm>{
            term(Rational(1), Rational(1), Rational(1)),
            term(Rational(1), Rational(1), Rational(-1)),
            term(Rational(-2), Rational(0), Rational(1))},
        BinaryForm(4, {Rational(2), Rational(0), Rational(12), Rational(0), Rational(0)}));
    check(expand_representation(rep) == rep.target(), "x^2(2x^2+12y^2) identity");
    assert_sign_rule(rep);
}

void monomial_root_of_unity() {
    const Rational ws[] = {Rational(1), Rational(2), Rational(1, 2), Rational(-3),
                           Rational(5, 3)};
    for (int k = 1; k <= 8; ++k)
        for (const auto& w : ws)
            check(xkyk_identity_verify(k, w),
                  "root-of-unity representation of x^k y^k at k=" + std::to_string(k) +
                      ", w=" + w.str());
}

void hilbert_degree_14() {
    // (429/256)(x^2+y^2)^7 = x^14 + y^14 + (1/128)((x+y)^14 + (x-y)^14)
    //   + ((2+sqrt2)/4)^7 ((x+ry)^14 + (x-ry)^14 + (rx+y)^14 + (rx-y)^14),
    // r = sqrt 2 - 1
    auto K = FieldDescriptor::quadratic(Int(2));
    FieldElement rho(Rational(-1), Rational(1), K);
    FieldElement w = FieldElement(Rational(1, 2), Rational(1, 4), K).pow(7);
    BinaryForm circle(2, {Rational(1), Rational(0), Rational(1)});
    BinaryForm target = Rational(429, 256) * circle.pow(7);
    FieldElement one(Rational(1)), zero(Rational(0));
    auto rep = Representation::make(
        K,
        std::vector<Representation::RawTerm>{
            term(Rational(1), one, zero),
            term(Rational(1), zero, one),
            term(Rational(1, 128), one, one),
            term(Rational(1, 128), one, FieldElement(Rational(-1))),
            term(w, one, rho),
            term(w, one, zero - rho),
            term(w, rho, one),
            term(w, rho, FieldElement(Rational(-1)))},
        target);
    check(expand_representation(rep) == target, "degree-14 Hilbert identity expansion");
    assert_sign_rule(rep);
}

}  // namespace

const std::vector<IdentityRecord>& identity_corpus() {
    static const std::vector<IdentityRecord> corpus = {
        {"quintic-rational-5term", "five fifth powers summing to 6(3x^5-20x^3y^2+10xy^4)",
         quintic_rational},
        {"quintic-gaussian-3term", "three fifth powers over Q(i) for 3x^5-20x^3y^2+10xy^4",
         quintic_gaussian},
        {"quintic-sqrt-neg2-4term", "four fifth powers over Q(sqrt -2) for 24 times the quintic",
         quintic_sqrt_neg2},
        {"cubic-three-term-family", "3(a-b)(a+2b)(2a+b) x^2 y as three cubes, 10 parameter pairs",
         cubic_three_term_family},
        {"quartic-definite-family", "one-parameter identity for x^4 + 6l x^2y^2 + y^4, 20 values",
         quartic_definite_family},
        {"quartic-xy-family", "one-parameter identity for x^3y + c x^2y^2 + xy^3, 20 values",
         quartic_xy_family},
        {"quartic-x2-identity", "x^2(2x^2+12y^2) as three fourth powers", quartic_x2_identity},
        {"monomial-root-of-unity", "x^k y^k root-of-unity representations, k <= 8, 5 scales",
         monomial_root_of_unity},
        {"hilbert-degree-14", "(429/256)(x^2+y^2)^7 as eight 14th powers over Q(sqrt 2)",
         hilbert_degree_14},
    };
    return corpus;
}

IdentityReport run_identity_suite() {
    IdentityReport report;
    for (const auto& record : identity_corpus()) {
        IdentityReport::Row row{record.id, record.description, true, ""};
        try {
            record.check();
        } catch (const std::exception& e) {
            row.pass = false;
            row.error = e.what();
            report.all_pass = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace binlen
