#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace binlen {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Accepts "p", "-p", "p/q" with optional sign; rejects everything else.
    static std::optional<Rational> parse(const std::string& text);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_)), raw_tag{}); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(den(), num());  // re-canonicalizes the sign
    }
    Rational pow(unsigned long e) const;

    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_), raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_), raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_), raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_), raw_tag{});
    }
    Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    struct raw_tag {};
    Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}
    mpq_class v_;  // maintained canonical
};

Int binomial(unsigned long n, unsigned long k);

/// Exact integer square root if n is a perfect square.
std::optional<Int> sqrt_exact(const Int& n);

/// Exact rational square root if q is a square in Q.
std::optional<Rational> sqrt_exact(const Rational& q);

/// n = square * squarefree with squarefree part carrying the sign of n.
/// Returns {squarefree, s} where n = s^2 * squarefree, s > 0.
std::pair<Int, Int> squarefree_decompose(const Int& n);

}  // namespace binlen
