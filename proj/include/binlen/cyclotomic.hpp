#pragma once

#include <vector>

#include "binlen/rational.hpp"
#include "binlen/upoly.hpp"

namespace binlen {

/// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
UPoly cyclotomic_polynomial(int n);

/// Element of Q(zeta_n): a polynomial in zeta_n reduced modulo the n-th
/// cyclotomic polynomial, so the coefficient vector has length phi(n).
class CyclotomicElement {
public:
    explicit CyclotomicElement(int order, UPoly coeffs = {});
    static CyclotomicElement zero(int order) { return CyclotomicElement(order); }
    static CyclotomicElement one(int order) {
        return CyclotomicElement(order, UPoly{Rational(1)});
    }
    static CyclotomicElement from_rational(int order, const Rational& r) {
        return CyclotomicElement(order, UPoly{r});
    }
    /// zeta_n^k, any integer k (negative exponents wrap around).
    static CyclotomicElement zeta_power(int order, long k);

    int order() const { return order_; }
    const UPoly& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return coeffs_.size() <= 1; }
    Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

    friend CyclotomicElement operator+(const CyclotomicElement& x, const CyclotomicElement& y);
    friend CyclotomicElement operator-(const CyclotomicElement& x, const CyclotomicElement& y);
    friend CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y);
    CyclotomicElement pow(unsigned long e) const;

    friend bool operator==(const CyclotomicElement& x, const CyclotomicElement& y) {
        return x.order_ == y.order_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CyclotomicElement& x, const CyclotomicElement& y) {
        return !(x == y);
    }

private:
    int order_;
    UPoly coeffs_;  // degree < phi(n), reduced mod Phi_n
};

}  // namespace binlen
