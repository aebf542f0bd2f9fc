#include "binlen/reallen.hpp"

#include <algorithm>
#include <stdexcept>

namespace binlen {

namespace {

/// Splitting field and factors of h over Q or a single real quadratic
/// extension, when one suffices. Used to turn real-split certificates into
/// concrete representations.
std::optional<std::pair<FieldDescriptor, std::vector<LinearForm>>> try_split_real(
    const BinaryForm& h) {
    if (!is_squarefree(h)) return std::nullopt;
    Factorization fac = factor_over_Q(h);
    Int radicand(0);
    for (const auto& [q, mult] : fac.nonlinear) {
        if (mult != 1 || q.degree() != 2) return std::nullopt;
        Rational D = q.raw(1) * q.raw(1) - Rational(4) * q.raw(0) * q.raw(2);
        if (D.sign() <= 0) return std::nullopt;
        Int m = squarefree_decompose(D.num() * D.den()).first;
        if (m == 1) continue;  // rational split, unreachable for irreducibles
        if (radicand != 0 && radicand != m) return std::nullopt;  // needs two surds
        radicand = m;
    }
    FieldDescriptor K = radicand == 0 ? FieldDescriptor::rationals()
                                      : FieldDescriptor::quadratic(radicand);
    auto factors = splits_distinct(h, K);
    if (!factors) return std::nullopt;
    return std::make_pair(K, *factors);
}

std::optional<Representation> witness_from_certificate(const BinaryForm& f,
                                                       const BinaryForm& h) {
    auto split = try_split_real(h);
    if (!split) return std::nullopt;
    std::vector<LinearForm> duals;
    for (const auto& lf : split->second) duals.push_back(lf.dual());
    return recover_coefficients(f, duals, split->first);
}

}  // namespace

AngularRepresentation to_angular(const Representation& rep) {
    if (!rep.field().is_real_subfield())
        throw std::invalid_argument("to_angular: representation must live in a real subfield");
    AngularRepresentation ang;
    ang.degree = rep.degree();
    for (const auto& term : rep.terms()) ang.entries.push_back({term.lambda, term.form});
    // order of angles in (-pi/2, pi/2]: slopes beta/alpha ascending, y last
    std::sort(ang.entries.begin(), ang.entries.end(), [](const auto& u, const auto& v) {
        bool uy = u.form.alpha().is_zero(), vy = v.form.alpha().is_zero();
        if (uy || vy) return !uy && vy;
        FieldElement su = u.form.beta() / u.form.alpha();
        FieldElement sv = v.form.beta() / v.form.alpha();
        return (su - sv).sign() < 0;
    });
    return ang;
}

int sign_change_count(const AngularRepresentation& rep, int d) {
    if (rep.entries.empty()) throw std::invalid_argument("sign_change_count: empty representation");
    std::vector<int> signs;
    signs.reserve(rep.entries.size() + 1);
    for (const auto& e : rep.entries) {
        int s = e.lambda.sign();
        if (s == 0) throw std::invalid_argument("sign_change_count: zero lambda");
        signs.push_back(s);
    }
    signs.push_back(d % 2 == 0 ? signs.front() : -signs.front());
    int changes = 0;
    for (std::size_t i = 1; i < signs.size(); ++i)
        if (signs[i] != signs[i - 1]) ++changes;
    return changes;
}

SignRuleReport verify_1864(const Representation& rep) {
    if (!rep.field().is_real_subfield())
        throw std::invalid_argument("verify_1864: non-real field");
    if (rep.target().is_zero()) throw std::invalid_argument("verify_1864: zero target");
    SignRuleReport report;
    report.tau = real_root_census(rep.target()).tau;
    report.sigma = sign_change_count(to_angular(rep), rep.degree());
    report.ok = report.tau <= report.sigma;
    return report;
}

void assert_sign_rule(const Representation& rep) {
    if (!rep.field().is_real_subfield()) return;
    if (rep.target().is_zero() || rep.length() < 2) return;
    auto report = verify_1864(rep);
    if (!report.ok)
        throw std::logic_error("sign rule violated: tau=" + std::to_string(report.tau) +
                               " > sigma=" + std::to_string(report.sigma));
}

QuarticRealLength quartic_real_length(const BinaryForm& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_real_length: degree must be 4");
    if (f.is_zero()) throw std::invalid_argument("quartic_real_length: zero form");
    auto lc = min_length_over_C(f);
    if (lc.r == 1) {
        LinearForm factor(lc.certificate.h.raw(0), lc.certificate.h.raw(1));
        auto witness = recover_coefficients(f, {factor.dual()}, FieldDescriptor::rationals());
        return {1, witness, "single fourth power"};
    }
    int tau = real_root_census(f).tau;
    if (tau == 4) {
        auto [h, rep] = universal_sylvester_construction(f, FieldDescriptor::rationals());
        if (rep.length() != 4)
            throw std::logic_error("quartic_real_length: split quartic with short witness");
        return {4, rep, "product of four real linear factors"};
    }
    // length 2 iff the degree-2 kernel member splits over R
    auto basis = kernel_basis(hankel(f, 2));
    if (basis.size() > 1)
        throw std::logic_error("quartic_real_length: unexpected kernel dimension at r=2");
    if (basis.size() == 1) {
        BinaryForm h(2, basis[0]);
        if (is_squarefree(h) && real_root_census(h).tau == 2)
            return {2, witness_from_certificate(f, h), "degree-2 Sylvester form splits over R"};
    }
    // length 3; constructions provide a witness for the canonical shapes
    auto shape_witness = [&](const BinaryForm& g,
                             bool mirrored) -> std::optional<Representation> {
        const auto& c = g.raw();
        auto term = [&](const Rational& lambda, Rational a, Rational b) {
            if (mirrored) std::swap(a, b);
            return Representation::RawTerm{FieldElement(lambda), FieldElement(a),
                                           FieldElement(b)};
        };
        // c0 x^4 + c2 x^2 y^2 + c0 y^4 via the two-power family
        if (!c[0].is_zero() && c[1].is_zero() && c[3].is_zero() && c[0] == c[4]) {
            Rational lam = c[2] / (Rational(6) * c[0]);
            Rational disc = (Rational(1) - lam) * (Rational(1) + Rational(3) * lam);
            auto s = sqrt_exact(disc);
            if (!s || lam.is_zero()) return std::nullopt;
            for (const Rational& root : {(-(lam + Rational(1)) + *s) / (Rational(2) * lam),
                                         (-(lam + Rational(1)) - *s) / (Rational(2) * lam)}) {
                if (root == Rational(1)) continue;
                Rational w = c[0] / ((root - Rational(1)).pow(2) *
                                     (root * root + root + Rational(1)));
                try {
                    return Representation::make(
                        FieldDescriptor::rationals(),
                        {term(w, root, Rational(1)), term(w, Rational(1), root),
                         term(-w * (root.pow(3) + root), Rational(1), Rational(1))},
                        f);
                } catch (const std::invalid_argument&) {
                    continue;
                }
            }
            return std::nullopt;
        }
        // c x^2 (2x^2 + 12y^2)
        if (!c[0].is_zero() && c[1].is_zero() && c[3].is_zero() && c[4].is_zero() &&
            c[2] == Rational(6) * c[0]) {
            Rational u = c[0] / Rational(2);
            try {
                return Representation::make(
                    FieldDescriptor::rationals(),
                    {term(u, Rational(1), Rational(1)), term(u, Rational(1), Rational(-1)),
                     term(Rational(-2) * u, Rational(0), Rational(1))},
                    f);
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        }
        // c xy (x^2 + e xy + y^2)
        if (c[0].is_zero() && c[4].is_zero() && !c[1].is_zero() && c[1] == c[3]) {
            Rational e = c[2] / c[1];
            Rational A = Rational(3) - Rational(2) * e;
            std::vector<Rational> roots;
            if (A.is_zero()) {
                // linear case: (6 - 2e) q + (3 - 2e) = 0 with e = 3/2
                roots.push_back(-(Rational(3) - Rational(2) * e) /
                                (Rational(6) - Rational(2) * e));
            } else {
                Rational disc = Rational(12) * e * (Rational(2) - e);
                auto s = sqrt_exact(disc);
                if (!s) return std::nullopt;
                Rational B = Rational(6) - Rational(2) * e;
                roots.push_back((-B + *s) / (Rational(2) * A));
                roots.push_back((-B - *s) / (Rational(2) * A));
            }
            for (const Rational& q : roots) {
                if (q == Rational(1)) continue;
                Rational w =
                    c[1] / (Rational(4) * (q - Rational(1)).pow(2) * (q * q + q + Rational(1)));
                try {
                    return Representation::make(
                        FieldDescriptor::rationals(),
                        {term(w * (q.pow(4) + Rational(1)), Rational(1), Rational(1)),
                         term(-w, q, Rational(1)), term(-w, Rational(1), q)},
                        f);
                } catch (const std::invalid_argument&) {
                    continue;
                }
            }
            return std::nullopt;
        }
        return std::nullopt;
    };
    std::optional<Representation> witness = shape_witness(f, false);
    if (!witness) {
        std::vector<Rational> rev(f.raw().rbegin(), f.raw().rend());
        witness = shape_witness(BinaryForm(4, std::move(rev)), true);
    }
    return {3, witness, "quartic classification (tau < 4, lengths 1 and 2 excluded)"};
}

LengthResult real_length_bounds(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("real_length_bounds: zero form");
    int d = f.degree();
    auto lc = min_length_over_C(f);
    auto exact = [&](int v, std::string why, std::optional<Representation> witness,
                     std::optional<SylvesterCertificate> cert) {
        LengthResult res;
        res.lower = res.upper = v;
        res.exact = true;
        res.lower_provenance = why;
        res.upper_provenance = std::move(why);
        res.witness = std::move(witness);
        res.certificate = std::move(cert);
        if (res.witness) assert_sign_rule(*res.witness);
        return res;
    };

    if (lc.r == 1) {
        LinearForm factor(lc.certificate.h.raw(0), lc.certificate.h.raw(1));
        auto witness = recover_coefficients(f, {factor.dual()}, FieldDescriptor::rationals());
        return exact(1, "single d-th power", witness, lc.certificate);
    }
    if (d == 3) {
        auto [hessian, disc] = cubic_invariants(f);
        if (!is_squarefree(f))
            return exact(3, "repeated factor, not a cube", std::nullopt, std::nullopt);
        if (disc.sign() < 0) {  // -3*disc > 0: the Hessian splits over R
            return exact(2, "sqrt(-3 disc) real for a squarefree cubic",
                         witness_from_certificate(f, hessian), std::nullopt);
        }
        return exact(3, "three real factors: sqrt(-3 disc) imaginary", std::nullopt,
                     std::nullopt);
    }
    if (d == 4) {
        auto q = quartic_real_length(f);
        return exact(q.length, q.provenance, q.witness, std::nullopt);
    }
    int tau = real_root_census(f).tau;
    int lower = std::max(lc.r, tau);
    if (lower >= d) {
        auto [h, rep] = universal_sylvester_construction(f, FieldDescriptor::rationals());
        if (rep.length() != d)
            throw std::logic_error("real_length_bounds: lower bound d with a shorter witness");
        assert_sign_rule(rep);
        std::string why = tau >= lc.r ? "tau = " + std::to_string(tau) + " real factors"
                                      : "L_C(f) = " + std::to_string(lc.r);
        return exact(d, why, rep, std::nullopt);
    }
    if (auto circle = detect_circle_power(f)) {
        int k = circle->first;
        return exact(k + 1, "circle power: tan pi/(k+1) is real", std::nullopt, std::nullopt);
    }
    if (splits_distinct_over(lc.certificate.h, FieldDescriptor::reals())) {
        return exact(lc.r, "minimal Sylvester form splits over R",
                     witness_from_certificate(f, lc.certificate.h), lc.certificate);
    }
    LengthResult res;
    res.lower = lower;
    res.exact = false;
    res.lower_provenance = tau > lc.r ? "tau = " + std::to_string(tau) + " (sign rule)"
                                      : "L_C(f) = " + std::to_string(lc.r);
    auto [h, rep] = universal_sylvester_construction(f, FieldDescriptor::rationals());
    res.upper = std::min(d, rep.length());
    res.upper_provenance = "universal degree-d Sylvester construction";
    res.witness = rep;
    res.exact = res.lower == res.upper;
    if (res.witness) assert_sign_rule(*res.witness);
    return res;
}

}  // namespace binlen
