#include "binlen/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace binlen {

namespace {

UPoly cyclotomic_uncached(int n, std::map<int, UPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d | n
    UPoly num(n + 1);
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = upoly::divexact(num, cyclotomic_uncached(d, cache));
    }
    cache[n] = num;
    return num;
}

}  // namespace

UPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::mutex mutex;
    static std::map<int, UPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    return cyclotomic_uncached(n, cache);
}

CyclotomicElement::CyclotomicElement(int order, UPoly coeffs) : order_(order) {
    if (order < 1) throw std::invalid_argument("CyclotomicElement: order must be positive");
    UPoly phi = cyclotomic_polynomial(order);
    coeffs_ = upoly::divrem(upoly::normalized(std::move(coeffs)), phi).second;
}

CyclotomicElement CyclotomicElement::zeta_power(int order, long k) {
    long e = ((k % order) + order) % order;
    UPoly p(e + 1);
    p[e] = Rational(1);
    return CyclotomicElement(order, std::move(p));
}

CyclotomicElement operator+(const CyclotomicElement& x, const CyclotomicElement& y) {
    if (x.order_ != y.order_) throw std::invalid_argument("CyclotomicElement: order mismatch");
    return CyclotomicElement(x.order_, upoly::add(x.coeffs_, y.coeffs_));
}

CyclotomicElement operator-(const CyclotomicElement& x, const CyclotomicElement& y) {
    if (x.order_ != y.order_) throw std::invalid_argument("CyclotomicElement: order mismatch");
    return CyclotomicElement(x.order_, upoly::sub(x.coeffs_, y.coeffs_));
}

CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y) {
    if (x.order_ != y.order_) throw std::invalid_argument("CyclotomicElement: order mismatch");
    return CyclotomicElement(x.order_, upoly::mul(x.coeffs_, y.coeffs_));
}

CyclotomicElement CyclotomicElement::pow(unsigned long e) const {
    CyclotomicElement acc = one(order_);
    CyclotomicElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace binlen
