#include "binlen/sylvester.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace binlen {

DenseMatrix<Rational> HankelMatrix::dense() const {
    DenseMatrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
    return m;
}

HankelMatrix hankel(const BinaryForm& f, int r) {
    int d = f.degree();
    if (r < 0 || r > d) throw std::invalid_argument("hankel: r out of range");
    HankelMatrix m;
    m.rows = d - r + 1;
    m.cols = r + 1;
    m.entries.resize(static_cast<std::size_t>(m.rows) * m.cols);
    auto a = f.normalized();
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.entries[i * m.cols + j] = a[i + j];
    return m;
}

namespace {

int lead_index(const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

int trail_index(const std::vector<Rational>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (!v[i].is_zero()) return i;
    return -1;
}

std::vector<Rational> primitive_scaled(const std::vector<Rational>& v) {
    Int den(1);
    for (const auto& c : v) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        den = l;
    }
    Int g(0);
    std::vector<Int> nums(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        nums[i] = v[i].num() * (den / v[i].den());
        Int t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
        g = t;
    }
    int lead = lead_index(v);
    if (lead >= 0 && nums[lead] < 0) g = -g;
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(Int(nums[i] / g));
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const HankelMatrix& m) {
    auto basis = nullspace_raw(m.dense());
    if (basis.empty()) return basis;
    // echelonize rows by leading index
    std::sort(basis.begin(), basis.end(),
              [](const auto& a, const auto& b) { return lead_index(a) < lead_index(b); });
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rational inv = basis[i][lead_index(basis[i])].inverse();
        for (auto& c : basis[i]) c *= inv;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == i) continue;
            int li = lead_index(basis[i]);
            Rational factor = basis[j][li];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < basis[j].size(); ++k)
                basis[j][k] -= factor * basis[i][k];
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const auto& a, const auto& b) { return lead_index(a) < lead_index(b); });
    // make trailing indices pairwise distinct, reducing earlier rows by
    // later ones; leading indices are untouched since later leads are larger
    for (int i = static_cast<int>(basis.size()) - 2; i >= 0; --i) {
        bool changed = true;
        while (changed) {
            changed = false;
            int ti = trail_index(basis[i]);
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                if (trail_index(basis[j]) != ti) continue;
                Rational factor = basis[i][ti] / basis[j][ti];
                for (std::size_t k = 0; k < basis[i].size(); ++k)
                    basis[i][k] -= factor * basis[j][k];
                changed = true;
                break;
            }
        }
    }
    for (auto& row : basis) row = primitive_scaled(row);
    return basis;
}

BinaryForm kernel_member(const std::vector<std::vector<Rational>>& basis,
                         const std::vector<Int>& coords, int r) {
    if (basis.empty() || coords.size() != basis.size())
        throw std::invalid_argument("kernel_member: coordinate/basis size mismatch");
    std::vector<Rational> c(r + 1);
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int i = 0; i <= r; ++i) c[i] += Rational(coords[b]) * basis[b][i];
    return BinaryForm(r, std::move(c));
}

Representation Representation::make(const FieldDescriptor& field, std::vector<RawTerm> raw,
                                    BinaryForm target) {
    int d = target.degree();
    std::vector<Term> terms;
    for (auto& t : raw) {
        LinearForm form(t.alpha, t.beta);
        // normalization rescales the form; absorb the d-th power of the
        // scale into lambda
        FieldElement scale = form.alpha().is_zero() ? t.beta / form.beta()
                                                    : t.alpha / form.alpha();
        FieldElement lambda = t.lambda * scale.pow(d);
        if (lambda.is_zero()) continue;
        terms.push_back(Term{std::move(lambda), std::move(form)});
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].form == terms[j].form)
                throw std::invalid_argument("Representation: summands not pairwise distinct");
    std::vector<std::pair<FieldElement, LinearForm>> flat;
    flat.reserve(terms.size());
    for (const auto& t : terms) flat.emplace_back(t.lambda, t.form);
    auto expanded = to_rational_form(expand_terms(flat, d));
    if (!expanded || *expanded != target)
        throw std::invalid_argument("Representation: expansion does not match target");
    return Representation(field, std::move(terms), std::move(target));
}

Representation Representation::make(const FieldDescriptor& field,
                                    const std::vector<std::pair<FieldElement, LinearForm>>& terms,
                                    BinaryForm target) {
    std::vector<RawTerm> raw;
    raw.reserve(terms.size());
    for (const auto& [lambda, form] : terms)
        raw.push_back(RawTerm{lambda, form.alpha(), form.beta()});
    return make(field, std::move(raw), std::move(target));
}

namespace detail {

void for_each_primitive_vector(int dim, long height,
                               const std::function<bool(const std::vector<long>&)>& fn) {
    std::vector<long> v(dim);
    for (long shell = 1; shell <= height; ++shell) {
        // odometer over [-shell, shell]^dim, lexicographic ascending
        std::fill(v.begin(), v.end(), -shell);
        while (true) {
            long maxabs = 0;
            for (long c : v) maxabs = std::max(maxabs, std::abs(c));
            if (maxabs == shell) {
                int lead = -1;
                for (int i = 0; i < dim; ++i) {
                    if (v[i] != 0) {
                        lead = i;
                        break;
                    }
                }
                if (lead >= 0 && v[lead] > 0) {
                    long g = 0;
                    for (long c : v) g = std::gcd(g, std::abs(c));
                    if (g == 1 && fn(v)) return;
                }
            }
            int pos = dim - 1;
            while (pos >= 0 && v[pos] == shell) {
                v[pos] = -shell;
                --pos;
            }
            if (pos < 0) break;
            ++v[pos];
        }
    }
}

SquarefreeDecision find_squarefree_member(const std::vector<std::vector<Rational>>& basis,
                                          int r) {
    SquarefreeDecision decision;
    if (basis.empty()) return decision;
    int dim = static_cast<int>(basis.size());
    auto as_coords = [](const std::vector<long>& v) {
        std::vector<Int> c;
        c.reserve(v.size());
        for (long x : v) c.emplace_back(x);
        return c;
    };
    // deterministic sampling
    for_each_primitive_vector(dim, 2, [&](const std::vector<long>& v) {
        auto coords = as_coords(v);
        BinaryForm h = kernel_member(basis, coords, r);
        if (!h.is_zero() && is_squarefree(h)) {
            decision.member = {std::move(h), std::move(coords)};
            return true;
        }
        return false;
    });
    if (decision.member) return decision;
    // common-divisor shortcut: a non-squarefree gcd forces every member
    // non-squarefree
    BinaryForm g = BinaryForm::homogenized(UPoly{}, 0);
    bool first = true;
    for (const auto& row : basis) {
        BinaryForm member(r, row);
        g = first ? member : form_gcd(g, member);
        first = false;
    }
    if (!g.is_zero() && g.degree() >= 1 && !is_squarefree(g)) return decision;
    // exact decision: the discriminant of the generic combination has total
    // degree <= 2r-2 in the coordinates, so vanishing on a full grid of
    // side 2r-1 proves there is no squarefree member
    long side = std::max(2 * r - 1, 2);
    double total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<double>(side);
    if (total > 4e6)
        throw std::logic_error("find_squarefree_member: grid budget exceeded");
    std::vector<long> v(dim, 0);
    while (true) {
        bool nonzero = std::any_of(v.begin(), v.end(), [](long c) { return c != 0; });
        if (nonzero) {
            auto coords = as_coords(v);
            BinaryForm h = kernel_member(basis, coords, r);
            if (!h.is_zero() && is_squarefree(h)) {
                long g2 = 0;
                for (long c : v) g2 = std::gcd(g2, std::abs(c));
                for (auto& c : coords) c /= g2;
                decision.member = {kernel_member(basis, coords, r), coords};
                return decision;
            }
        }
        int pos = dim - 1;
        while (pos >= 0 && v[pos] == side - 1) {
            v[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++v[pos];
    }
    return decision;
}

}  // namespace detail

MinLengthC min_length_over_C(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("min_length_over_C: zero form");
    int d = f.degree();
    for (int r = 1; r <= d; ++r) {
        auto basis = kernel_basis(hankel(f, r));
        if (basis.empty()) continue;
        auto decision = detail::find_squarefree_member(basis, r);
        if (!decision.member) continue;
        SylvesterCertificate cert;
        cert.r = r;
        cert.h = decision.member->first;
        cert.field = FieldDescriptor::complexes();
        cert.kernel_coords = decision.member->second;
        if (auto factors = splits_distinct(cert.h, FieldDescriptor::rationals()))
            cert.factors = *factors;
        return MinLengthC{r, std::move(cert)};
    }
    throw std::logic_error("min_length_over_C: no squarefree kernel member up to degree d");
}

std::optional<Representation> recover_coefficients(const BinaryForm& f,
                                                   const std::vector<LinearForm>& forms,
                                                   const FieldDescriptor& K) {
    int d = f.degree();
    if (forms.empty() || static_cast<int>(forms.size()) > d + 1)
        throw std::invalid_argument("recover_coefficients: need 1..d+1 forms");
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (forms[i] == forms[j])
                throw std::invalid_argument("recover_coefficients: duplicate forms");
    int r = static_cast<int>(forms.size());
    DenseMatrix<FieldElement> m(d + 1, r);
    for (int k = 0; k < r; ++k) {
        const auto& alpha = forms[k].alpha();
        const auto& beta = forms[k].beta();
        for (int j = 0; j <= d; ++j) m.at(j, k) = alpha.pow(d - j) * beta.pow(j);
    }
    std::vector<FieldElement> rhs;
    rhs.reserve(d + 1);
    for (const auto& a : f.normalized()) rhs.emplace_back(a);
    auto sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    std::vector<std::pair<FieldElement, LinearForm>> terms;
    for (int k = 0; k < r; ++k) terms.emplace_back((*sol)[k], forms[k]);
    return Representation::make(K, terms, f);
}

std::optional<SylvesterCertificate> kernel_splitting_search(const BinaryForm& f, int r,
                                                            const FieldDescriptor& K,
                                                            long height) {
    if (!K.has_elements())
        throw std::invalid_argument("kernel_splitting_search: K must be Q or Q(sqrt d)");
    auto basis = kernel_basis(hankel(f, r));
    if (basis.empty()) return std::nullopt;
    std::optional<SylvesterCertificate> found;
    detail::for_each_primitive_vector(
        static_cast<int>(basis.size()), height, [&](const std::vector<long>& v) {
            std::vector<Int> coords(v.begin(), v.end());
            BinaryForm h = kernel_member(basis, coords, r);
            if (h.is_zero()) return false;
            auto factors = splits_distinct(h, K);
            if (!factors) return false;
            found = SylvesterCertificate{r, std::move(h), K, std::move(*factors),
                                         std::move(coords)};
            return true;
        });
    return found;
}

namespace {

std::vector<LinearForm> dual_forms(const std::vector<LinearForm>& factors) {
    std::vector<LinearForm> duals;
    duals.reserve(factors.size());
    for (const auto& lf : factors) duals.push_back(lf.dual());
    return duals;
}

LengthResult make_exact(int value, std::string lower_prov, std::string upper_prov,
                        std::optional<Representation> witness,
                        std::optional<SylvesterCertificate> cert) {
    LengthResult res;
    res.lower = res.upper = value;
    res.exact = true;
    res.lower_provenance = std::move(lower_prov);
    res.upper_provenance = std::move(upper_prov);
    res.witness = std::move(witness);
    res.certificate = std::move(cert);
    return res;
}

}  // namespace

LengthResult min_length_over_K(const BinaryForm& f, const FieldDescriptor& K, long height,
                               const RankCertifier& certifier) {
    if (!K.has_elements())
        throw std::invalid_argument("min_length_over_K: K must be Q or Q(sqrt d), use the "
                                    "dispatcher for R and C");
    if (f.is_zero()) throw std::invalid_argument("min_length_over_K: zero form");
    int d = f.degree();
    auto lc = min_length_over_C(f);

    if (lc.r == 1) {
        // a single d-th power over C is one over the coefficient field
        const BinaryForm& h = lc.certificate.h;  // linear kernel member
        LinearForm factor(h.raw(0), h.raw(1));
        auto witness = recover_coefficients(f, {factor.dual()}, K);
        if (!witness) throw std::logic_error("min_length_over_K: power extraction failed");
        SylvesterCertificate cert{1, h, K, {factor}, lc.certificate.kernel_coords};
        return make_exact(1, "L_C(f) = 1", "single d-th power witness", std::move(witness),
                          std::move(cert));
    }

    int lower = lc.r;
    std::string lower_prov = "L_C(f) = " + std::to_string(lc.r) + " (Hankel kernels)";
    if (K.is_real_subfield()) {
        int tau = real_root_census(f).tau;
        if (tau > lower) {
            lower = tau;
            lower_prov = "tau = " + std::to_string(tau) + " real factors (sign rule)";
        }
    }

    int unknown_low = 0;
    std::string unknown_note;
    auto finish_with_witness = [&](int r, SylvesterCertificate cert,
                                   Representation witness) -> LengthResult {
        std::ostringstream upper;
        upper << "witness(kernel r=" << r << ", coords=[";
        for (std::size_t i = 0; i < cert.kernel_coords.size(); ++i)
            upper << (i ? "," : "") << cert.kernel_coords[i].get_str();
        upper << "])";
        if (witness.length() < r)
            throw std::logic_error("min_length_over_K: recovered representation shorter than "
                                   "certified lower bound");
        if (unknown_low == 0) return make_exact(r, lower_prov, upper.str(), witness, cert);
        LengthResult res;
        res.lower = unknown_low;
        res.upper = r;
        res.exact = false;
        res.lower_provenance = lower_prov + "; " + unknown_note;
        res.upper_provenance = upper.str();
        res.witness = std::move(witness);
        res.certificate = std::move(cert);
        return res;
    };

    for (int r = std::max(lower, 1); r <= d; ++r) {
        // r = d always succeeds constructively, so certifiers only apply below
        if (certifier && r < d) {
            if (auto prov = certifier(f, r, K)) {
                if (unknown_low == 0) {
                    lower = r + 1;
                    lower_prov = *prov;
                }
                continue;
            }
        }
        if (r == d) {
            auto [h, rep] = universal_sylvester_construction(f, K);
            SylvesterCertificate cert;
            cert.r = d;
            cert.h = h;
            cert.field = K;
            if (auto split = splits_distinct(h, FieldDescriptor::rationals()))
                cert.factors = *split;
            std::string upper = "universal degree-d Sylvester construction";
            if (unknown_low == 0) {
                if (rep.length() < d)
                    throw std::logic_error("min_length_over_K: exclusions contradict a shorter "
                                           "universal representation");
                return make_exact(d, lower_prov, upper, rep, cert);
            }
            LengthResult res;
            res.lower = unknown_low;
            res.upper = std::min(d, rep.length());
            res.exact = res.lower == res.upper;
            res.lower_provenance = lower_prov + "; " + unknown_note;
            res.upper_provenance = upper;
            res.witness = rep;
            res.certificate = cert;
            return res;
        }
        auto basis = kernel_basis(hankel(f, r));
        if (basis.empty()) {
            if (unknown_low == 0) {
                lower = r + 1;
                lower_prov = "ker H_" + std::to_string(r) + "(f) trivial";
            }
            continue;
        }
        if (basis.size() == 1) {
            BinaryForm gen(r, basis[0]);
            if (auto factors = splits_distinct(gen, K)) {
                auto witness = recover_coefficients(f, dual_forms(*factors), K);
                if (!witness)
                    throw std::logic_error("min_length_over_K: split Sylvester form did not "
                                           "yield a representation");
                SylvesterCertificate cert{r, gen, K, *factors, {Int(1)}};
                return finish_with_witness(r, std::move(cert), std::move(*witness));
            }
            if (unknown_low == 0) {
                lower = r + 1;
                lower_prov = "unique degree-" + std::to_string(r) +
                             " Sylvester form does not split over " + K.str();
            }
            continue;
        }
        if (auto cert = kernel_splitting_search(f, r, K, height)) {
            auto witness = recover_coefficients(f, dual_forms(cert->factors), K);
            if (!witness)
                throw std::logic_error("min_length_over_K: split Sylvester form did not yield "
                                       "a representation");
            return finish_with_witness(r, std::move(*cert), std::move(*witness));
        }
        if (unknown_low == 0) {
            unknown_low = r;
            unknown_note = "kernel search at r=" + std::to_string(r) + " exhausted height " +
                           std::to_string(height) + " without a witness";
        }
    }
    throw std::logic_error("min_length_over_K: fell through the degree-d construction");
}

std::pair<BinaryForm, Representation> universal_sylvester_construction(
    const BinaryForm& f, const FieldDescriptor& K) {
    if (f.is_zero()) throw std::invalid_argument("universal_sylvester_construction: zero form");
    if (!K.has_elements())
        throw std::invalid_argument("universal_sylvester_construction: K must carry elements");
    int d = f.degree();
    // shear so that the x^d coefficient is nonzero
    long s = 0;
    while (f.eval(Rational(1), Rational(s)).is_zero()) ++s;
    BinaryForm g = s == 0 ? f
                          : apply_linear_change(
                                f, {{{Rational(1), Rational(0)}, {Rational(s), Rational(1)}}});
    auto a = g.normalized();

    for (long start = 1;; ++start) {
        std::vector<Rational> gammas;
        for (int j = 0; j < d - 1; ++j) gammas.emplace_back(start + j);
        // elementary symmetric functions e_0..e_(d-1) of the gammas
        std::vector<Rational> e(d, Rational(0));
        e[0] = Rational(1);
        for (const auto& gamma : gammas)
            for (int k = d - 1; k >= 1; --k) e[k] += gamma * e[k - 1];
        Rational beta(0), alpha(0);
        for (int k = 0; k <= d - 1; ++k) {
            beta -= a[k] * e[k];
            alpha += a[k + 1] * e[k];
        }
        if (alpha.is_zero() && beta.is_zero()) continue;
        bool degenerate = false;
        for (const auto& gamma : gammas)
            if (alpha * gamma == beta) degenerate = true;
        if (degenerate) continue;

        std::vector<LinearForm> factors;
        factors.emplace_back(alpha, beta);
        for (const auto& gamma : gammas) factors.emplace_back(Rational(1), gamma);
        std::vector<LinearForm> duals;
        for (const auto& lf : factors) duals.push_back(lf.dual());
        auto rep_g = recover_coefficients(g, duals, K);
        if (!rep_g)
            throw std::logic_error("universal_sylvester_construction: theorem system "
                                   "inconsistent");
        Representation rep = *rep_g;
        // all d summand forms, shear-transformed back; zero-lambda summands
        // still participate in the certificate product
        std::vector<LinearForm> summand_forms;
        for (const auto& dual : duals) {
            if (s == 0) {
                summand_forms.push_back(dual);
                continue;
            }
            // g(x,y) = f(x, sx+y) so f(x,y) = g(x, y-sx); A x + B y picks
            // up (A - sB) x + B y
            FieldElement A = dual.alpha(), B = dual.beta();
            summand_forms.emplace_back(A - FieldElement(Rational(s)) * B, B);
        }
        if (s != 0) {
            std::vector<Representation::RawTerm> back;
            for (const auto& term : rep_g->terms()) {
                FieldElement A = term.form.alpha(), B = term.form.beta();
                back.push_back(Representation::RawTerm{
                    term.lambda, A - FieldElement(Rational(s)) * B, B});
            }
            rep = Representation::make(K, std::move(back), f);
        }
        BinaryForm h(0, {Rational(1)});
        for (const auto& form : summand_forms) {
            LinearForm factor = form.dual();
            if (!factor.is_rational())
                throw std::logic_error("universal_sylvester_construction: irrational factor");
            h = h * BinaryForm(1, {factor.alpha().rat_part(), factor.beta().rat_part()});
        }
        if (!apolar_apply(h, f).is_zero())
            throw std::logic_error("universal_sylvester_construction: certificate not apolar");
        return {h, rep};
    }
}

}  // namespace binlen
