#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "binlen/binform.hpp"
#include "binlen/upoly.hpp"

namespace binlen {
namespace {

constexpr int kDegreeCap = 12;

// ---------------------------------------------------------------------------
// F_p polynomial helpers for the factor-degree sieve. Coefficients are
// uint64_t residues; p stays far below 2^16 so products never overflow.
// ---------------------------------------------------------------------------

using FpPoly = std::vector<std::uint64_t>;

FpPoly fp_normalize(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::uint64_t fp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return fp_normalize(std::move(r));
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
    a = fp_normalize(std::move(a));
    std::uint64_t inv_lead = fp_pow(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back() * inv_lead % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::uint64_t sub = c * m[j] % p;
            a[shift + j] = (a[shift + j] + p - sub) % p;
        }
        a = fp_normalize(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    a = fp_normalize(std::move(a));
    b = fp_normalize(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = fp_pow(a.back(), p - 2, p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    return fp_normalize(std::move(r));
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, base, p), m, p);
        base = fp_mod(fp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Irreducible factor degrees of a squarefree monic polynomial mod p.
std::vector<int> fp_factor_degrees(FpPoly f, std::uint64_t p) {
    std::vector<int> degrees;
    FpPoly h{0, 1};  // t
    int i = 1;
    while (static_cast<int>(f.size()) - 1 >= 2 * i) {
        h = fp_powmod(std::move(h), p, f, p);
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        diff = fp_normalize(std::move(diff));
        FpPoly g = fp_gcd(diff, f, p);
        if (!g.empty() && g.size() > 1) {
            int count = (static_cast<int>(g.size()) - 1) / i;
            for (int c = 0; c < count; ++c) degrees.push_back(i);
            // divide f by g
            FpPoly q;
            {
                // long division, exact
                FpPoly rem = f;
                std::uint64_t inv_lead = fp_pow(g.back(), p - 2, p);
                q.assign(rem.size() - g.size() + 1, 0);
                for (int k = static_cast<int>(rem.size()) - 1;
                     k >= static_cast<int>(g.size()) - 1; --k) {
                    std::uint64_t c = rem[k] * inv_lead % p;
                    if (c == 0) continue;
                    q[k - (g.size() - 1)] = c;
                    for (std::size_t j = 0; j < g.size(); ++j) {
                        std::uint64_t sub = c * g[j] % p;
                        rem[k - (g.size() - 1) + j] = (rem[k - (g.size() - 1) + j] + p - sub) % p;
                    }
                }
                f = fp_normalize(std::move(q));
            }
            h = fp_mod(std::move(h), f.empty() ? FpPoly{1} : f, p);
        }
        if (f.size() <= 1) break;
        ++i;
    }
    if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
    return degrees;
}

/// Proper factor degrees k <= n/2 not excluded by factorization patterns
/// modulo a few good primes. Sound: a rational factor of degree k forces a
/// sub-multiset of the mod-p degrees summing to k, for every good prime.
std::vector<int> possible_factor_degrees(const UPoly& q) {
    int n = upoly::degree(q);
    std::uint32_t allowed = (1u << (n + 1)) - 1;
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    int good = 0;
    for (std::uint64_t p : primes) {
        if (good >= 4 || allowed == (1u | (1u << n))) break;
        if (mpz_fdiv_ui(q.back().num().get_mpz_t(), p) == 0) continue;
        FpPoly fp(n + 1);
        bool ok = true;
        for (int i = 0; i <= n; ++i) {
            // q is integer by contract
            std::uint64_t c = mpz_fdiv_ui(q[i].num().get_mpz_t(), p);
            fp[i] = c;
        }
        fp = fp_normalize(std::move(fp));
        if (static_cast<int>(fp.size()) - 1 != n) ok = false;
        if (ok) {
            FpPoly g = fp_gcd(fp, fp_derivative(fp, p), p);
            if (g.size() > 1) ok = false;  // not squarefree mod p
        }
        if (!ok) continue;
        ++good;
        std::uint64_t inv = fp_pow(fp.back(), p - 2, p);
        for (auto& c : fp) c = c * inv % p;
        auto degs = fp_factor_degrees(fp, p);
        std::uint32_t sums = 1;  // subset-sum reachability
        for (int d : degs) sums |= sums << d;
        allowed &= sums;
    }
    std::vector<int> out;
    for (int k = 1; k <= n / 2; ++k)
        if (allowed & (1u << k)) out.push_back(k);
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers
// ---------------------------------------------------------------------------

std::vector<Int> divisors_of(const Int& n0) {
    Int n = ::abs(n0);
    std::vector<std::pair<Int, int>> fac;
    Int rest = n;
    for (Int p(2); p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        fac.emplace_back(p, e);
    }
    if (rest > 1) fac.emplace_back(rest, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Int pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool is_integer_poly(const UPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_integer(); });
}

/// Quartic 2+2 split: enumerates leading/constant divisor pairs and solves
/// the two odd-coefficient equations linearly. Much cheaper than Kronecker
/// interpolation when the boundary coefficients have many divisors.
std::optional<UPoly> quartic_quadratic_factor(const UPoly& q) {
    const Rational &c0 = q[0], &c1 = q[1], &c2 = q[2], &c3 = q[3], &c4 = q[4];
    auto leads = divisors_of(c4.num());
    auto consts = divisors_of(c0.num());
    for (const Int& a2 : leads) {
        Int b2 = c4.num() / a2;
        for (const Int& a0u : consts) {
            for (int sign = 0; sign < 2; ++sign) {
                Int a0 = sign ? -a0u : a0u;
                Int b0 = c0.num() / a0;
                // (a2 t^2 + a1 t + a0)(b2 t^2 + b1 t + b0):
                //   t^3: a2 b1 + a1 b2 = c3
                //   t^1: a0 b1 + a1 b0 = c1
                Rational det = Rational(a2 * b0 - a0 * b2);
                std::vector<std::pair<Rational, Rational>> a1b1;
                if (!det.is_zero()) {
                    a1b1.emplace_back((Rational(b0) * c3 - Rational(b2) * c1) / det,
                                      (Rational(a2) * c1 - Rational(a0) * c3) / det);
                } else {
                    // proportional rows: the pair (a1, b1) is a line; the
                    // t^2 equation pins a1 via a quadratic
                    if (Rational(a0) * c3 != Rational(a2) * c1) continue;
                    Rational M = c2 - Rational(a2 * b0 + a0 * b2);
                    // -b2 a1^2 + c3 a1 - a2 M = 0
                    Rational A(-b2), B = c3, C = Rational(-a2) * M;
                    Rational disc = B * B - Rational(4) * A * C;
                    auto sq = sqrt_exact(disc);
                    if (!sq) continue;
                    for (const Rational& root :
                         {(-B + *sq) / (Rational(2) * A), (-B - *sq) / (Rational(2) * A)}) {
                        a1b1.emplace_back(root, (c3 - root * Rational(b2)) / Rational(a2));
                    }
                }
                for (const auto& [a1, b1] : a1b1) {
                    if (!a1.is_integer() || !b1.is_integer()) continue;
                    // t^2: a2 b0 + a1 b1 + a0 b2 = c2
                    if (Rational(a2 * b0 + a0 * b2) + a1 * b1 != c2) continue;
                    UPoly g{Rational(a0), a1, Rational(a2)};
                    auto [quot, rem] = upoly::divrem(q, g);
                    if (!rem.empty()) continue;
                    return g;
                }
            }
        }
    }
    return std::nullopt;
}

/// Kronecker search for a degree-k factor of a primitive integer polynomial
/// with no rational roots. Returns a primitive factor or absent.
std::optional<UPoly> kronecker_factor(const UPoly& q, int k) {
    int n = upoly::degree(q);
    if (n == 4 && k == 2) return quartic_quadratic_factor(q);
    std::vector<Rational> points;
    for (long t = 0; static_cast<int>(points.size()) < k + 1; ++t) {
        points.emplace_back(t);
        if (t > 0 && static_cast<int>(points.size()) < k + 1) points.emplace_back(-t);
    }
    std::vector<std::vector<Int>> divs;
    for (const auto& t : points) {
        Rational v = upoly::eval(q, t);
        divs.push_back(divisors_of(v.num()));
    }
    // Lagrange basis polynomials for the chosen points
    std::vector<UPoly> basis;
    for (std::size_t j = 0; j < points.size(); ++j) {
        UPoly b{Rational(1)};
        Rational denom(1);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i == j) continue;
            b = upoly::mul(b, UPoly{-points[i], Rational(1)});
            denom *= points[j] - points[i];
        }
        basis.push_back(upoly::scale(b, denom.inverse()));
    }
    std::vector<std::size_t> idx(points.size(), 0);
    std::vector<int> signs(points.size(), 1);
    long long budget = 20'000'000;
    while (true) {
        if (--budget < 0)
            throw std::logic_error("factor_over_Q: Kronecker enumeration budget exceeded");
        UPoly g;
        for (std::size_t j = 0; j < points.size(); ++j) {
            Rational value(signs[j] > 0 ? divs[j][idx[j]] : -divs[j][idx[j]]);
            g = upoly::add(g, upoly::scale(basis[j], value));
        }
        if (upoly::degree(g) == k && !g.back().is_zero() && g.back() > Rational(0) &&
            is_integer_poly(g)) {
            if (mpz_divisible_p(q.back().num().get_mpz_t(), g.back().num().get_mpz_t())) {
                auto [quot, rem] = upoly::divrem(q, g);
                if (rem.empty()) return g;
            }
        }
        // odometer over divisor choices and signs
        std::size_t j = 0;
        for (; j < points.size(); ++j) {
            if (signs[j] > 0) {
                signs[j] = -1;
                break;
            }
            signs[j] = 1;
            if (++idx[j] < divs[j].size()) break;
            idx[j] = 0;
        }
        if (j == points.size()) return std::nullopt;
    }
}

/// Full factorization of a squarefree primitive integer polynomial with no
/// rational roots into irreducible primitive integer factors.
std::vector<UPoly> factor_hard_part(UPoly q) {
    std::vector<UPoly> out;
    while (true) {
        int n = upoly::degree(q);
        if (n <= 0) break;
        if (n <= 3) {  // rootless quadratics and cubics are irreducible
            out.push_back(q);
            break;
        }
        bool split = false;
        for (int k : possible_factor_degrees(q)) {
            if (auto g = kronecker_factor(q, k)) {
                out.push_back(*g);
                q = upoly::primitive_integer(upoly::divexact(q, *g));
                split = true;
                break;
            }
        }
        if (!split) {
            out.push_back(q);
            break;
        }
    }
    return out;
}

/// Rational roots of a primitive integer polynomial, removed with
/// multiplicity. Returns {(root, multiplicity)} and reduces p in place.
std::vector<std::pair<Rational, int>> extract_rational_roots(UPoly& p) {
    std::vector<std::pair<Rational, int>> roots;
    if (upoly::degree(p) < 1) return roots;
    int zmult = 0;
    while (upoly::degree(p) >= 1 && p.front().is_zero()) {
        p.erase(p.begin());
        ++zmult;
    }
    if (zmult > 0) roots.emplace_back(Rational(0), zmult);
    if (upoly::degree(p) < 1) return roots;
    auto rs = divisors_of(p.front().num());
    auto ss = divisors_of(p.back().num());
    for (const Int& r : rs) {
        for (const Int& s : ss) {
            Int g;
            mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
            if (g != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand(sign ? -r : r, s);
                int mult = 0;
                while (upoly::degree(p) >= 1 && upoly::eval(p, cand).is_zero()) {
                    p = upoly::divexact(p, UPoly{-cand, Rational(1)});
                    ++mult;
                }
                if (mult > 0) {
                    roots.emplace_back(cand, mult);
                    p = upoly::primitive_integer(p);
                    if (upoly::degree(p) < 1) return roots;
                }
            }
        }
    }
    return roots;
}

/// Necessary condition for splitting into distinct linear factors over K
/// (Q or Q(sqrt d)): the splitting field has degree <= 2, so at a good odd
/// prime p — not dividing the leading coefficient, with h squarefree mod p,
/// and split in Q(sqrt d) — the Frobenius is trivial and h mod p must split
/// into distinct linear factors, i.e. h | t^p - t. Cheap enough to gate the
/// exact factorization during kernel searches.
bool linear_split_filter(const UPoly& g, const FieldDescriptor& K) {
    int n = upoly::degree(g);
    if (n <= 1) return true;
    static const std::uint64_t primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    int tested = 0;
    for (std::uint64_t p : primes) {
        if (tested >= 2) break;
        if (mpz_fdiv_ui(g.back().num().get_mpz_t(), p) == 0) continue;
        if (K.is_quadratic() &&
            mpz_kronecker_ui(K.radicand().get_mpz_t(), static_cast<unsigned long>(p)) != 1)
            continue;
        FpPoly fp(n + 1);
        for (int i = 0; i <= n; ++i) fp[i] = mpz_fdiv_ui(g[i].num().get_mpz_t(), p);
        fp = fp_normalize(std::move(fp));
        if (static_cast<int>(fp.size()) - 1 != n) continue;
        FpPoly d = fp_gcd(fp, fp_derivative(fp, p), p);
        if (d.size() > 1) continue;  // bad reduction for this prime
        ++tested;
        FpPoly t{0, 1};
        FpPoly tp = fp_powmod(t, p, fp, p);
        if (tp != t) return false;
    }
    return true;
}

}  // namespace

Factorization factor_over_Q(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_over_Q: zero form");
    if (f.degree() > kDegreeCap)
        throw std::invalid_argument("factor_over_Q: unsupported degree (cap " +
                                    std::to_string(kDegreeCap) + ")");
    Factorization out;
    int my = f.y_multiplicity();
    if (my > 0) out.linear.emplace_back(LinearForm(Rational(0), Rational(1)), my);
    UPoly p = f.dehomogenized();
    if (upoly::degree(p) < 0) throw std::logic_error("factor_over_Q: empty dehomogenization");
    if (upoly::degree(p) == 0) {
        out.unit = p[0];
        return out;
    }
    UPoly pi = upoly::primitive_integer(p);
    out.unit = upoly::lead(p) / upoly::lead(pi);

    // roots first (x shows up as the root t = 0)
    for (auto& [root, mult] : extract_rational_roots(pi)) {
        // t - root, scaled primitive: den*t - num
        out.linear.emplace_back(LinearForm(Rational(root.den()), -Rational(root.num())), mult);
    }
    if (upoly::degree(pi) >= 1) {
        for (const auto& [g, mult] : upoly::squarefree_decomposition(pi)) {
            UPoly gi = upoly::primitive_integer(g);
            for (const auto& q : factor_hard_part(gi)) {
                if (upoly::degree(q) == 1)
                    out.linear.emplace_back(LinearForm(q[1], q[0]), mult);
                else
                    out.nonlinear.emplace_back(BinaryForm::homogenized(q, upoly::degree(q)), mult);
            }
        }
    }

    std::sort(out.linear.begin(), out.linear.end(), [](const auto& a, const auto& b) {
        return LinearForm::compare(a.first, b.first) < 0;
    });
    std::sort(out.nonlinear.begin(), out.nonlinear.end(), [](const auto& a, const auto& b) {
        return BinaryForm::compare(a.first, b.first) < 0;
    });
    // settle the unit exactly against the expanded product
    BinaryForm probe = out.expand();
    int pivot = 0;
    while (probe.raw(pivot).is_zero()) ++pivot;
    out.unit *= f.raw(pivot) / probe.raw(pivot);
    if (out.expand() != f) throw std::logic_error("factor_over_Q: internal expansion mismatch");
    return out;
}

std::optional<std::vector<LinearForm>> splits_distinct(const BinaryForm& h,
                                                       const FieldDescriptor& K) {
    if (h.is_zero()) throw std::invalid_argument("splits_distinct: zero form");
    if (!K.has_elements())
        throw std::invalid_argument("splits_distinct: use splits_distinct_over for R and C");
    if (h.y_multiplicity() >= 2) return std::nullopt;
    if (!linear_split_filter(upoly::primitive_integer(h.dehomogenized()), K))
        return std::nullopt;
    if (!is_squarefree(h)) return std::nullopt;
    Factorization fac = factor_over_Q(h);
    std::vector<LinearForm> factors;
    for (const auto& [lf, mult] : fac.linear) {
        if (mult != 1) return std::nullopt;  // unreachable after squarefree test
        factors.push_back(K.is_quadratic()
                              ? LinearForm(*coerce(lf.alpha(), K), *coerce(lf.beta(), K))
                              : lf);
    }
    for (const auto& [q, mult] : fac.nonlinear) {
        if (mult != 1 || q.degree() > 2 || !K.is_quadratic()) return std::nullopt;
        const Rational A = q.raw(0), B = q.raw(1), C = q.raw(2);
        Rational D = B * B - Rational(4) * A * C;
        // the quadratic splits over Q(sqrt d) iff D/d (or D) is a nonzero square
        Rational d_rad{K.radicand()};
        FieldElement sqrtD(0);
        if (auto r = sqrt_exact(D)) {
            sqrtD = FieldElement(*r, Rational(0), K);
        } else if (auto r2 = sqrt_exact(D / d_rad)) {
            sqrtD = FieldElement(Rational(0), *r2, K);
        } else {
            return std::nullopt;
        }
        if (sqrtD.is_zero()) return std::nullopt;
        FieldElement twoA = FieldElement(Rational(2) * A, Rational(0), K);
        FieldElement negB = FieldElement(-B, Rational(0), K);
        for (const FieldElement& root :
             {(negB + sqrtD) / twoA, (negB - sqrtD) / twoA}) {
            // q = A (x - t1 y)(x - t2 y)
            factors.emplace_back(FieldElement(Rational(1), Rational(0), K),
                                 FieldElement(0) - root);
        }
    }
    if (static_cast<int>(factors.size()) != h.degree())
        throw std::logic_error("splits_distinct: factor count mismatch");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i] == factors[j])
                throw std::logic_error("splits_distinct: repeated factor after squarefree test");
    std::sort(factors.begin(), factors.end());
    return factors;
}

bool splits_distinct_over(const BinaryForm& h, const FieldDescriptor& K) {
    if (h.is_zero()) throw std::invalid_argument("splits_distinct_over: zero form");
    switch (K.kind()) {
        case FieldKind::complexes:
            return is_squarefree(h);
        case FieldKind::reals: {
            if (!is_squarefree(h)) return false;
            auto census = real_root_census(h);
            return census.tau == h.degree();
        }
        default:
            return splits_distinct(h, K).has_value();
    }
}

}  // namespace binlen
