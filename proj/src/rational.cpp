#include "binlen/rational.hpp"

namespace binlen {

std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(text)) return std::nullopt;
        return Rational(Int(text, 10));  // base 10: no octal from leading zeros
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den, 10);
    if (d == 0) return std::nullopt;
    return Rational(Int(num, 10), d);
}

Rational Rational::pow(unsigned long e) const {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rational(n, d);
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::optional<Int> sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
    auto n = sqrt_exact(q.num());
    if (!n) return std::nullopt;
    auto d = sqrt_exact(q.den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n == 0) return {Int(0), Int(1)};
    Int rest = ::abs(n);
    Int sf(1), sq(1);
    for (Int p(2); p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) sq *= p;
        if (e % 2 == 1) sf *= p;
    }
    // rest is 1 or a prime > sqrt of the original value
    sf *= rest;
    if (n < 0) sf = -sf;
    return {sf, sq};
}

}  // namespace binlen
