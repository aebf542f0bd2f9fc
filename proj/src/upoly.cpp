#include "binlen/upoly.hpp"

#include <stdexcept>

namespace binlen {
namespace upoly {

UPoly normalized(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const UPoly& p) { return p.empty(); }

Rational lead(const UPoly& p) {
    if (p.empty()) throw std::domain_error("upoly: leading coefficient of zero");
    return p.back();
}

Rational eval(const UPoly& p, const Rational& t) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return normalized(std::move(r));
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return normalized(std::move(r));
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return normalized(std::move(r));
}

UPoly scale(const UPoly& a, const Rational& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
    return normalized(std::move(r));
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("upoly: division by zero polynomial");
    UPoly rem = a;
    if (a.size() < b.size()) return {{}, normalized(std::move(rem))};
    UPoly quot(a.size() - b.size() + 1);
    Rational inv_lead = b.back().inverse();
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (rem[i].is_zero()) continue;
        Rational q = rem[i] * inv_lead;
        quot[i - (b.size() - 1)] = q;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i - (b.size() - 1) + j] -= q * b[j];
    }
    return {normalized(std::move(quot)), normalized(std::move(rem))};
}

UPoly divexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.empty()) throw std::domain_error("upoly: inexact division");
    return q;
}

UPoly gcd(UPoly a, UPoly b) {
    a = normalized(std::move(a));
    b = normalized(std::move(b));
    while (!b.empty()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != Rational(1)) {
        Rational inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

bool is_squarefree(const UPoly& p) {
    if (degree(p) <= 1) return !p.empty();
    return degree(gcd(p, derivative(p))) == 0;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (degree(p) < 1) return out;
    // Yun's algorithm
    UPoly d = derivative(p);
    UPoly a = gcd(p, d);
    UPoly b = divexact(p, a);
    UPoly c = divexact(d, a);
    int i = 1;
    while (degree(b) > 0) {
        UPoly t = sub(c, derivative(b));
        UPoly g = gcd(b, t);
        if (degree(g) > 0) out.emplace_back(g, i);
        b = divexact(b, g.empty() ? UPoly{Rational(1)} : g);
        c = divexact(t, g.empty() ? UPoly{Rational(1)} : g);
        ++i;
    }
    return out;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int sturm_real_root_count(const UPoly& p0) {
    UPoly p = normalized(p0);
    if (p.empty()) throw std::domain_error("upoly: Sturm chain of zero polynomial");
    if (degree(p) == 0) return 0;
    std::vector<UPoly> chain{p, derivative(p)};
    while (degree(chain.back()) > 0) {
        auto r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;  // nontrivial gcd: caller passes squarefree input, but stay safe
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_minus_inf, at_plus_inf;
    for (const auto& q : chain) {
        if (q.empty()) continue;
        int d = degree(q);
        int lc = q.back().sign();
        at_plus_inf.push_back(lc);
        at_minus_inf.push_back(d % 2 == 0 ? lc : -lc);
    }
    return sign_variations(at_minus_inf) - sign_variations(at_plus_inf);
}

UPoly primitive_integer(const UPoly& p0) {
    UPoly p = normalized(p0);
    if (p.empty()) return p;
    Int den_lcm(1);
    for (const auto& c : p) {
        Int g;
        mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = g;
    }
    Int num_gcd(0);
    std::vector<Int> nums;
    nums.reserve(p.size());
    for (const auto& c : p) {
        Int n = c.num() * (den_lcm / c.den());
        Int g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        num_gcd = g;
        nums.push_back(std::move(n));
    }
    if (nums.back() < 0) num_gcd = -num_gcd;
    UPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(Int(nums[i] / num_gcd));
    return out;
}

}  // namespace upoly
}  // namespace binlen
