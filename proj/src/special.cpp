#include "binlen/special.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace binlen {

namespace {

LengthResult exact_result(int v, std::string lower, std::string upper,
                          std::optional<Representation> witness = std::nullopt,
                          std::optional<SylvesterCertificate> cert = std::nullopt) {
    LengthResult res;
    res.lower = res.upper = v;
    res.exact = true;
    res.lower_provenance = std::move(lower);
    res.upper_provenance = std::move(upper);
    res.witness = std::move(witness);
    res.certificate = std::move(cert);
    return res;
}

std::optional<Representation> recover_from_split(const BinaryForm& f, const BinaryForm& h,
                                                 const FieldDescriptor& K) {
    auto factors = splits_distinct(h, K);
    if (!factors) return std::nullopt;
    std::vector<LinearForm> duals;
    for (const auto& lf : *factors) duals.push_back(lf.dual());
    return recover_coefficients(f, duals, K);
}

}  // namespace

LengthResult cubic_length(const BinaryForm& f, const FieldDescriptor& K) {
    if (f.degree() != 3) throw std::invalid_argument("cubic_length: degree must be 3");
    if (f.is_zero()) throw std::invalid_argument("cubic_length: zero form");
    // cube detection by Hankel rank (dim ker >= 2 <=> rank <= 1)
    if (kernel_basis(hankel(f, 2)).size() >= 2) {
        std::optional<Representation> witness;
        if (K.has_elements()) {
            auto lc = min_length_over_C(f);
            LinearForm factor(lc.certificate.h.raw(0), lc.certificate.h.raw(1));
            witness = recover_coefficients(f, {factor.dual()}, K);
        }
        return exact_result(1, "rank H_2 <= 1: perfect cube", "single cube witness",
                            std::move(witness));
    }
    if (!is_squarefree(f)) {
        std::optional<Representation> witness;
        if (K.has_elements())
            witness = universal_sylvester_construction(f, K).second;
        return exact_result(3, "repeated factor, not a cube",
                            "universal degree-3 construction", std::move(witness));
    }
    auto [hessian, disc] = cubic_invariants(f);
    Rational s = Rational(-3) * disc;
    bool two;
    switch (K.kind()) {
        case FieldKind::complexes: two = true; break;
        case FieldKind::reals: two = s.sign() > 0; break;
        default: {
            auto elem = coerce(FieldElement(s), K);
            two = elem && field_sqrt(*elem).has_value();
        }
    }
    if (two) {
        std::optional<Representation> witness;
        std::optional<SylvesterCertificate> cert;
        if (K.has_elements()) {
            auto factors = splits_distinct(hessian, K);
            if (!factors) throw std::logic_error("cubic_length: Hessian failed to split");
            witness = recover_from_split(f, hessian, K);
            cert = SylvesterCertificate{2, hessian, K, *factors, {}};
        }
        return exact_result(2, "sqrt(-3 disc) in K splits the Hessian",
                            "Hessian Sylvester form", std::move(witness), std::move(cert));
    }
    std::optional<Representation> witness;
    if (K.has_elements()) witness = universal_sylvester_construction(f, K).second;
    return exact_result(3, "sqrt(-3 disc) not in K", "universal degree-3 construction",
                        std::move(witness));
}

std::optional<std::pair<LinearForm, LinearForm>> top_length_detect(const BinaryForm& f) {
    int d = f.degree();
    if (d < 3) throw std::invalid_argument("top_length_detect: degree must be >= 3");
    if (f.is_zero()) return std::nullopt;
    BinaryForm g = form_gcd(form_gcd(f, f.derivative_x()), f.derivative_y());
    if (g.degree() != d - 2) return std::nullopt;
    // g must be a (d-2)-nd power of a single linear form
    BinaryForm ell = g;
    while (ell.degree() > 1) {
        BinaryForm next = form_gcd(ell, form_gcd(ell.derivative_x(), ell.derivative_y()));
        if (next.degree() != ell.degree() - 1) return std::nullopt;
        ell = next;
    }
    if (ell.degree() != 1) return std::nullopt;
    BinaryForm power = ell.pow(d - 1);
    // f should be power * (linear); divide out
    UPoly pf = f.dehomogenized(), pp = power.dehomogenized();
    if (f.y_multiplicity() < power.y_multiplicity()) return std::nullopt;
    auto [quot, rem] = upoly::divrem(pf, pp);
    if (!rem.empty() || upoly::degree(quot) > 1) return std::nullopt;
    BinaryForm rest = BinaryForm::homogenized(quot, d - (d - 1));
    if (rest.is_zero()) return std::nullopt;
    LinearForm l1(ell.raw(0), ell.raw(1));
    LinearForm l2(rest.raw(0), rest.raw(1));
    if (l1 == l2) return std::nullopt;  // a pure d-th power has length 1, not d
    // confirm the product reproduces f up to the scalar
    BinaryForm prod = ell.pow(d - 1) * BinaryForm(1, {rest.raw(0), rest.raw(1)});
    int pivot = 0;
    while (prod.raw(pivot).is_zero()) ++pivot;
    if (f != f.raw(pivot) / prod.raw(pivot) * prod) return std::nullopt;
    return std::make_pair(l1, l2);
}

bool xkyk_identity_verify(int k, const Rational& w) {
    if (k < 1 || k > 8) throw std::invalid_argument("xkyk_identity_verify: k must be in 1..8");
    if (w.is_zero()) throw std::invalid_argument("xkyk_identity_verify: w must be nonzero");
    int n = 2 * k + 2;
    int d = 2 * k;
    std::vector<CyclotomicElement> acc(d + 1, CyclotomicElement::zero(n));
    for (int j = 0; j <= k; ++j) {
        for (int t = 0; t <= d; ++t) {
            // binom(2k,t) (zeta^j w)^(2k-t) (zeta^-j w^-1)^t
            CyclotomicElement z = CyclotomicElement::zeta_power(n, static_cast<long>(j) * (d - 2 * t));
            Rational wpow = w.pow(d - t) / w.pow(t);
            CyclotomicElement coeff =
                CyclotomicElement::from_rational(n, Rational(binomial(d, t)) * wpow);
            acc[t] = acc[t] + coeff * z;
        }
    }
    for (int t = 0; t <= d; ++t) {
        Rational expected =
            t == k ? Rational(k + 1) * Rational(binomial(d, k)) : Rational(0);
        if (acc[t] != CyclotomicElement::from_rational(n, expected)) return false;
    }
    // the cancellation driving the identity: sum_j zeta_(k+1)^(j(k-t)) is
    // k+1 when (k+1) | (k-t) and 0 otherwise
    for (int t = 0; t <= d; ++t) {
        CyclotomicElement sum = CyclotomicElement::zero(n);
        for (int j = 0; j <= k; ++j)
            sum = sum + CyclotomicElement::zeta_power(n, 2L * j * (k - t));
        int r = k - t;
        Rational expected = (r % (k + 1) == 0) ? Rational(k + 1) : Rational(0);
        if (sum != CyclotomicElement::from_rational(n, expected)) return false;
    }
    return true;
}

std::optional<FieldElement> tan_pi_over(int m) {
    auto quad = [](const Rational& a, const Rational& b, long rad) {
        return FieldElement(a, b, FieldDescriptor::quadratic(Int(rad)));
    };
    switch (m) {
        case 4: return FieldElement(Rational(1));
        case 3: return quad(Rational(0), Rational(1), 3);         // sqrt 3
        case 6: return quad(Rational(0), Rational(1, 3), 3);      // sqrt(3)/3
        case 8: return quad(Rational(-1), Rational(1), 2);        // sqrt 2 - 1
        case 12: return quad(Rational(2), Rational(-1), 3);       // 2 - sqrt 3
        default: return std::nullopt;
    }
}

namespace {

/// Representation of (x^2+y^2)^k of length k+1 over the field of
/// tan(pi/(k+1)), built by exact projective rotation through the angles
/// j pi / (k+1).
std::optional<Representation> circle_witness(int k, const BinaryForm& target) {
    int m = k + 1;
    auto tan = tan_pi_over(m);
    if (!tan) return std::nullopt;
    FieldDescriptor K = tan->is_rational() ? FieldDescriptor::rationals() : tan->field();
    std::vector<LinearForm> forms;
    FieldElement c = FieldElement(Rational(1)), s = FieldElement(Rational(0));
    for (int j = 0; j <= k; ++j) {
        forms.emplace_back(c, s);
        FieldElement nc = c - s * *tan;
        FieldElement ns = s + c * *tan;
        c = nc;
        s = ns;
    }
    return recover_coefficients(target, forms, K);
}

}  // namespace

LengthResult circle_power_length(int k, const FieldDescriptor& K) {
    if (k < 1) throw std::invalid_argument("circle_power_length: k must be >= 1");
    BinaryForm circle(2, {Rational(1), Rational(0), Rational(1)});
    BinaryForm f = circle.pow(k);
    int d = 2 * k, m = k + 1;
    if (k == 1) {
        // rank-2 quadratic: length 2 over every field
        std::optional<Representation> witness;
        if (K.has_elements())
            witness = Representation::make(
                K,
                std::vector<Representation::RawTerm>{
                    {FieldElement(Rational(1)), FieldElement(Rational(1)),
                     FieldElement(Rational(0))},
                    {FieldElement(Rational(1)), FieldElement(Rational(0)),
                     FieldElement(Rational(1))}},
                f);
        return exact_result(2, "rank of a definite quadratic", "sum of two squares",
                            std::move(witness));
    }
    switch (K.kind()) {
        case FieldKind::complexes:
            return exact_result(m, "H_k nonsingular (antidiagonal after x y <-> x^2+y^2)",
                                "root-of-unity representation");
        case FieldKind::reals: {
            auto witness = circle_witness(k, f);
            return exact_result(m, "H_k nonsingular", "tan pi/(k+1) is real",
                                std::move(witness));
        }
        case FieldKind::rationals: {
            if (m == 4) {
                auto witness = circle_witness(k, f);
                return exact_result(m, "H_k nonsingular", "tan pi/4 = 1 rational",
                                    std::move(witness));
            }
            break;
        }
        case FieldKind::quadratic: {
            auto tan = tan_pi_over(m);
            if (tan && (tan->is_rational() || tan->field() == K)) {
                auto witness = circle_witness(k, f);
                return exact_result(m, "H_k nonsingular",
                                    "tan pi/(k+1) lies in " + K.str(), std::move(witness));
            }
            break;
        }
    }
    // k+1 is excluded: tan(pi/(k+1)) is irrational (k != 1, 3) and not in
    // the given quadratic field
    LengthResult res;
    res.lower = m + 1;
    res.upper = d;
    res.exact = res.lower == res.upper;
    res.lower_provenance = "tan pi/(k+1) not in " + K.str();
    if (K.has_elements()) {
        auto [h, rep] = universal_sylvester_construction(f, K);
        res.upper = std::min(d, rep.length());
        res.exact = res.lower == res.upper;
        res.witness = rep;
    }
    res.upper_provenance = "universal degree-d Sylvester construction";
    return res;
}

Int gamma_quartic(const Int& a, const Int& b, const Int& m, const Int& n) {
    Int a2 = a * a, b2 = b * b, m2 = m * m, n2 = n * n;
    Int lead = 4 * a2 * a * b;
    return lead * m2 * m2 + (b2 * b2 - 6 * a2 * b2 - 3 * a2 * a2) * m2 * n2 + lead * n2 * n2;
}

std::optional<GammaWitness> gamma_square_search(const Int& a, const Int& b, long bound) {
    if (a == 0 || b == 0 || a == b || a == -b)
        throw std::invalid_argument("gamma_square_search: lambda^3 = lambda degenerate");
    for (long n = 0; n <= bound; ++n) {
        for (long m = 0; m <= n; ++m) {
            if (m == 0 && n == 0) continue;
            if (std::gcd(m, n) != 1) continue;
            Int g = gamma_quartic(a, b, Int(m), Int(n));
            if (g <= 0) continue;
            if (auto root = sqrt_exact(g)) return GammaWitness{Int(m), Int(n), *root};
        }
    }
    return std::nullopt;
}

bool descent_27_5_insoluble(long bound) {
    // mod-5 step: 27 X^2 + 5 Y^2 = Z^2 reduces to 2 X^2 = Z^2, and 2 is not
    // a quadratic residue mod 5
    for (int x = 1; x < 5; ++x) {
        for (int z = 0; z < 5; ++z) {
            if ((2 * x * x) % 5 == (z * z) % 5) return false;
        }
    }
    for (long x = 0; x <= bound; ++x)
        for (long y = 0; y <= bound; ++y)
            for (long z = 0; z <= bound; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (27 * x * x + 5 * y * y == z * z) return false;
            }
    return true;
}

std::optional<std::pair<Rational, Representation>> two_power_descend(
    const BinaryForm& f, const FieldDescriptor& K) {
    if (f.degree() < 3) throw std::invalid_argument("two_power_descend: degree must be >= 3");
    if (!K.has_elements())
        throw std::invalid_argument("two_power_descend: K must be Q or Q(sqrt d)");
    auto basis = kernel_basis(hankel(f, 2));
    if (basis.size() != 1) return std::nullopt;  // empty or a perfect power
    BinaryForm h(2, basis[0]);
    if (!is_squarefree(h)) return std::nullopt;
    Rational u = h.raw(1) * h.raw(1) - Rational(4) * h.raw(0) * h.raw(2);
    if (auto rep = recover_from_split(f, h, K)) return std::make_pair(u, std::move(*rep));
    if (K != FieldDescriptor::rationals()) return std::nullopt;
    Int m = squarefree_decompose(Int(u.num() * u.den())).first;
    FieldDescriptor ext = FieldDescriptor::quadratic(m);
    auto rep = recover_from_split(f, h, ext);
    if (!rep) throw std::logic_error("two_power_descend: extension split failed");
    return std::make_pair(u, std::move(*rep));
}

BinaryForm power_sum_family(const BinaryForm& g, int ell, int d) {
    int r = g.degree();
    if (g.raw(0) != Rational(1))
        throw std::invalid_argument("power_sum_family: g must be monic in x");
    if (!is_squarefree(g)) throw std::invalid_argument("power_sum_family: g has repeated roots");
    if (d <= 2 * r - 1) throw std::invalid_argument("power_sum_family: need d > 2r - 1");
    if (ell < 0) throw std::invalid_argument("power_sum_family: ell must be >= 0");
    // Newton's identities from the elementary symmetric functions e_k = raw(k)
    std::vector<Rational> p(ell + d + 1);
    p[0] = Rational(r);
    for (int k = 1; k <= ell + d; ++k) {
        Rational acc(0);
        for (int i = 1; i <= std::min(k - 1, r); ++i) {
            Rational term = g.raw(i) * p[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (k <= r) {
            Rational tail = Rational(k) * g.raw(k);
            acc += (k % 2 == 1) ? tail : -tail;
        }
        p[k] = acc;
    }
    std::vector<Rational> a(d + 1);
    for (int j = 0; j <= d; ++j) a[j] = p[ell + j];
    return BinaryForm::from_normalized(d, a);
}

namespace {

/// Matches c (x^4 + 6 lambda x^2 y^2 + y^4); returns (lambda, c).
std::optional<std::pair<Rational, Rational>> detect_gamma_shape(const BinaryForm& f) {
    if (f.degree() != 4) return std::nullopt;
    const auto& c = f.raw();
    if (c[0].is_zero() || !c[1].is_zero() || !c[3].is_zero() || c[0] != c[4])
        return std::nullopt;
    return std::make_pair(c[2] / (Rational(6) * c[0]), c[0]);
}

/// Length-3 representation over Q from a gamma witness via the split cubic
/// (m x + n y)(r x^2 + s x y + t y^2).
std::optional<Representation> gamma_witness_representation(const BinaryForm& f,
                                                           const Rational& lambda,
                                                           const GammaWitness& w) {
    Rational m(w.m), n(w.n);
    Rational l2 = lambda * lambda;
    BinaryForm linear(1, {m, n});
    BinaryForm quad(2, {lambda * n * n - l2 * m * m, (l2 - Rational(1)) * m * n,
                        lambda * m * m - l2 * n * n});
    if (quad.is_zero()) return std::nullopt;
    BinaryForm h = linear * quad;
    if (!is_squarefree(h)) return std::nullopt;
    auto rep = recover_from_split(f, h, FieldDescriptor::rationals());
    return rep;
}

}  // namespace

LengthResult length_over(const BinaryForm& f, const FieldDescriptor& K, long height) {
    if (f.is_zero()) throw std::invalid_argument("length_over: zero form");
    int d = f.degree();
    if (K.kind() == FieldKind::complexes) {
        auto lc = min_length_over_C(f);
        return exact_result(lc.r, "smallest r with a squarefree kernel member",
                            "squarefree Sylvester form of degree r", std::nullopt,
                            lc.certificate);
    }
    if (K.kind() == FieldKind::reals) return real_length_bounds(f);

    if (d == 1) {
        auto rep = recover_coefficients(f, {LinearForm(f.raw(0), f.raw(1))}, K);
        return exact_result(1, "linear form", "itself", std::move(rep));
    }
    if (d == 3) {
        auto res = cubic_length(f, K);
        if (res.witness) assert_sign_rule(*res.witness);
        return res;
    }
    if (auto circle = detect_circle_power(f)) {
        auto [k, scale] = *circle;
        auto res = circle_power_length(k, K);
        // rescale the witness to c (x^2+y^2)^k
        if (res.witness && scale != Rational(1)) {
            std::vector<Representation::RawTerm> raw;
            for (const auto& term : res.witness->terms())
                raw.push_back(Representation::RawTerm{term.lambda * FieldElement(scale),
                                                      term.form.alpha(), term.form.beta()});
            res.witness = Representation::make(res.witness->field(), std::move(raw), f);
        } else if (res.witness && !(res.witness->target() == f)) {
            res.witness.reset();
        }
        if (res.witness) assert_sign_rule(*res.witness);
        return res;
    }
    // gamma shortcut for x^4 + 6 lambda x^2 y^2 + y^4 over Q
    RankCertifier certifier;
    if (K.kind() == FieldKind::rationals) {
        if (auto shape = detect_gamma_shape(f)) {
            auto [lambda, scale] = *shape;
            if (lambda * lambda * lambda != lambda) {
                long bound = 128;  // diophantine scan, separate from the
                                   // kernel height budget
                if (auto w = gamma_square_search(lambda.num(), lambda.den(), bound)) {
                    if (auto rep = gamma_witness_representation(f, lambda, *w)) {
                        if (rep->length() == 3 && real_root_census(f).tau < 4) {
                            assert_sign_rule(*rep);
                            std::ostringstream why;
                            why << "gamma(" << lambda.num().get_str() << ","
                                << lambda.den().get_str() << "," << w->m.get_str() << ","
                                << w->n.get_str() << ") = " << w->root.get_str() << "^2";
                            return exact_result(3, "det H_2 = lambda - lambda^3 nonzero",
                                                why.str(), std::move(*rep));
                        }
                    }
                }
                bool impossible = lambda == Rational(1, 3) || lambda == Rational(1, 2);
                if (impossible) {
                    certifier = [](const BinaryForm&, int r,
                                   const FieldDescriptor&) -> std::optional<std::string> {
                        if (r == 3)
                            return "gamma diophantine insoluble (identity/descent) excludes "
                                   "length 3";
                        return std::nullopt;
                    };
                }
            }
        }
    }
    auto res = min_length_over_K(f, K, height, certifier);
    if (res.witness) assert_sign_rule(*res.witness);
    return res;
}

namespace {

bool same_representation(const Representation& a, const Representation& b) {
    if (a.length() != b.length()) return false;
    auto key = [](const Representation& r) {
        std::vector<std::string> forms;
        for (const auto& t : r.terms()) forms.push_back(t.form.str());
        std::sort(forms.begin(), forms.end());
        return forms;
    };
    return key(a) == key(b);
}

}  // namespace

Cabinet cabinet(const BinaryForm& f, const std::vector<FieldDescriptor>& fields, long height) {
    Cabinet cab;
    int d = f.degree();
    for (const auto& K : fields) cab.entries.emplace_back(K, length_over(f, K, height));
    int lc = min_length_over_C(f).r;
    for (const auto& [K, res] : cab.entries) {
        if (res.exact) cab.summary.insert(res.lower);
        // allowed lengths: r and d-(r-2) .. d
        if (res.exact && res.lower != lc && (res.lower < d - (lc - 2) || res.lower > d))
            throw std::logic_error("cabinet: length outside the allowed set for " + K.str());
        if (lc == 2 && res.exact && res.lower != 2 && res.lower != d)
            throw std::logic_error("cabinet: L_C = 2 forces lengths in {2, d}");
        if (res.lower < lc || res.upper > d)
            throw std::logic_error("cabinet: bounds escape [L_C, d] for " + K.str());
    }
    for (const auto& [K1, r1] : cab.entries) {
        for (const auto& [K2, r2] : cab.entries) {
            if (!(K1.embeds_in(K2)) || K1 == K2) continue;
            if (r1.exact && r2.exact && r1.lower < r2.lower)
                throw std::logic_error("cabinet: monotonicity violated between " + K1.str() +
                                       " and " + K2.str());
        }
    }
    // honest-collision bound on every distinct witness pair
    std::vector<const Representation*> reps;
    for (const auto& [K, res] : cab.entries)
        if (res.witness) reps.push_back(&*res.witness);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (same_representation(*reps[i], *reps[j])) continue;
            if (reps[i]->length() + reps[j]->length() < d + 2)
                throw std::logic_error("cabinet: honest representations collide below d+2");
        }
    }
    return cab;
}

}  // namespace binlen
