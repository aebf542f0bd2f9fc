#include "binlen/binform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace binlen {

BinaryForm::BinaryForm(int degree, std::vector<Rational> raw)
    : degree_(degree), raw_(std::move(raw)) {
    if (degree_ < 0) throw std::invalid_argument("BinaryForm: negative degree");
    if (raw_.size() != static_cast<std::size_t>(degree_) + 1)
        throw std::invalid_argument("BinaryForm: coefficient list must have degree+1 entries");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Rational>(degree + 1));
}

BinaryForm BinaryForm::from_normalized(int degree, const std::vector<Rational>& a) {
    if (a.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm: coefficient list must have degree+1 entries");
    std::vector<Rational> raw(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        raw[j] = Rational(binomial(degree, j)) * a[j];
    return BinaryForm(degree, std::move(raw));
}

BinaryForm BinaryForm::monomial(int degree, int i, const Rational& c) {
    auto f = zero(degree);
    f.raw_[i] = c;
    return f;
}

std::vector<Rational> BinaryForm::normalized() const {
    std::vector<Rational> a(raw_.size());
    for (std::size_t j = 0; j < raw_.size(); ++j) a[j] = normalized(static_cast<int>(j));
    return a;
}

bool BinaryForm::is_zero() const {
    return std::all_of(raw_.begin(), raw_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
    // Horner in x/y split: sum c_i x^(d-i) y^i
    Rational acc(0), xp(1), yp(1);
    std::vector<Rational> ypow(raw_.size());
    for (int i = 0; i <= degree_; ++i) {
        ypow[i] = yp;
        yp *= y;
    }
    for (int i = degree_; i >= 0; --i) {
        acc += raw_[i] * xp * ypow[i];
        xp *= x;
    }
    return acc;
}

FieldElement BinaryForm::eval(const FieldElement& x, const FieldElement& y) const {
    FieldElement acc(0);
    for (int i = 0; i <= degree_; ++i)
        acc = acc + FieldElement(raw_[i]) * x.pow(degree_ - i) * y.pow(i);
    return acc;
}

BinaryForm BinaryForm::derivative_x() const {
    if (degree_ == 0) return zero(0);
    std::vector<Rational> r(degree_);
    for (int i = 0; i < degree_; ++i) r[i] = raw_[i] * Rational(degree_ - i);
    return BinaryForm(degree_ - 1, std::move(r));
}

BinaryForm BinaryForm::derivative_y() const {
    if (degree_ == 0) return zero(0);
    std::vector<Rational> r(degree_);
    for (int i = 0; i < degree_; ++i) r[i] = raw_[i + 1] * Rational(i + 1);
    return BinaryForm(degree_ - 1, std::move(r));
}

UPoly BinaryForm::dehomogenized() const {
    UPoly p(degree_ + 1);
    for (int j = 0; j <= degree_; ++j) p[j] = raw_[degree_ - j];
    return upoly::normalized(std::move(p));
}

int BinaryForm::y_multiplicity() const {
    int m = 0;
    while (m <= degree_ && raw_[m].is_zero()) ++m;
    return m > degree_ ? degree_ : m;  // zero form reported as y^d by convention
}

BinaryForm BinaryForm::homogenized(const UPoly& p, int degree) {
    if (upoly::degree(p) > degree)
        throw std::invalid_argument("BinaryForm: univariate degree exceeds target");
    auto f = zero(degree);
    for (std::size_t j = 0; j < p.size(); ++j) f.raw_[degree - j] = p[j];
    return f;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree_ != g.degree_) throw std::invalid_argument("BinaryForm: degree mismatch in +");
    auto r = f.raw_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += g.raw_[i];
    return BinaryForm(f.degree_, std::move(r));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree_ != g.degree_) throw std::invalid_argument("BinaryForm: degree mismatch in -");
    auto r = f.raw_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= g.raw_[i];
    return BinaryForm(f.degree_, std::move(r));
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
    auto r = f.raw_;
    for (auto& x : r) x *= c;
    return BinaryForm(f.degree_, std::move(r));
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    std::vector<Rational> r(f.degree_ + g.degree_ + 1);
    for (int i = 0; i <= f.degree_; ++i) {
        if (f.raw_[i].is_zero()) continue;
        for (int j = 0; j <= g.degree_; ++j) r[i + j] += f.raw_[i] * g.raw_[j];
    }
    return BinaryForm(f.degree_ + g.degree_, std::move(r));
}

BinaryForm BinaryForm::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BinaryForm: negative power");
    BinaryForm acc(0, {Rational(1)});
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

int BinaryForm::compare(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree_ != g.degree_) return f.degree_ < g.degree_ ? -1 : 1;
    for (std::size_t i = 0; i < f.raw_.size(); ++i) {
        if (f.raw_[i] != g.raw_[i]) return f.raw_[i] < g.raw_[i] ? -1 : 1;
    }
    return 0;
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree_; ++i) {
        const Rational& c = raw_[i];
        if (c.is_zero()) continue;
        Rational abs = c.abs();
        if (!first)
            os << (c.sign() > 0 ? "+" : "-");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        int xe = degree_ - i, ye = i;
        bool has_var = xe > 0 || ye > 0;
        if (abs != Rational(1) || !has_var) os << abs.str();
        if (xe > 0) os << "x" << (xe > 1 ? "^" + std::to_string(xe) : "");
        if (ye > 0) os << "y" << (ye > 1 ? "^" + std::to_string(ye) : "");
    }
    return os.str();
}

LinearForm::LinearForm(FieldElement alpha, FieldElement beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.is_zero() && beta_.is_zero())
        throw std::invalid_argument("LinearForm: zero form");
    // force a common field early (throws on mixed quadratics)
    FieldElement probe = alpha_ + beta_;
    (void)probe;
    // monic in the first nonzero coordinate
    if (!alpha_.is_zero()) {
        beta_ = beta_ / alpha_;
        alpha_ = alpha_ / alpha_;
    } else {
        beta_ = beta_ / beta_;
    }
    // rational direction: switch to coprime integers, positive leading entry
    if (alpha_.is_rational() && beta_.is_rational()) {
        Rational a = alpha_.rat_part(), b = beta_.rat_part();
        Int den;
        mpz_lcm(den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
        Int an = a.num() * (den / a.den()), bn = b.num() * (den / b.den());
        Int g;
        mpz_gcd(g.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
        if (an < 0 || (an == 0 && bn < 0)) g = -g;
        auto field = alpha_.field() == FieldDescriptor::rationals() ? beta_.field() : alpha_.field();
        alpha_ = FieldElement(Rational(an / g), Rational(0), field);
        beta_ = FieldElement(Rational(bn / g), Rational(0), field);
    }
}

FieldDescriptor LinearForm::field() const {
    return alpha_.field() == FieldDescriptor::rationals() ? beta_.field() : alpha_.field();
}

std::vector<FieldElement> LinearForm::power_coefficients(int d) const {
    std::vector<FieldElement> out(d + 1);
    for (int k = 0; k <= d; ++k)
        out[k] = FieldElement(Rational(binomial(d, k))) * alpha_.pow(d - k) * beta_.pow(k);
    return out;
}

int LinearForm::compare(const LinearForm& u, const LinearForm& v) {
    if (int c = FieldElement::compare(u.alpha_, v.alpha_)) return c;
    return FieldElement::compare(u.beta_, v.beta_);
}

std::string LinearForm::str() const {
    std::ostringstream os;
    auto coef = [&](const FieldElement& c, const char* var, bool lead) {
        if (c.is_zero()) return;
        if (c.is_one()) {
            if (!lead) os << "+";
        } else if (c.is_rational() && c.rat_part() == Rational(-1)) {
            os << "-";
        } else if (c.is_rational()) {
            std::string s = c.str();
            if (!lead && s[0] != '-') os << "+";
            os << s;
        } else {
            if (!lead) os << "+";
            os << "(" << c.str() << ")";
        }
        os << var;
    };
    coef(alpha_, "x", true);
    coef(beta_, "y", alpha_.is_zero());
    return os.str();
}

BinaryForm Factorization::expand() const {
    BinaryForm acc(0, {unit});
    for (const auto& [lf, mult] : linear) {
        if (!lf.is_rational())
            throw std::logic_error("Factorization: expand requires rational factors");
        BinaryForm l(1, {lf.alpha().rat_part(), lf.beta().rat_part()});
        for (int i = 0; i < mult; ++i) acc = acc * l;
    }
    for (const auto& [q, mult] : nonlinear)
        for (int i = 0; i < mult; ++i) acc = acc * q;
    return acc;
}

BinaryForm apply_linear_change(const BinaryForm& f,
                               const std::array<std::array<Rational, 2>, 2>& m) {
    Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det.is_zero()) throw std::invalid_argument("apply_linear_change: singular matrix");
    int d = f.degree();
    BinaryForm u(1, {m[0][0], m[0][1]});  // image of x
    BinaryForm v(1, {m[1][0], m[1][1]});  // image of y
    BinaryForm acc = BinaryForm::zero(d);
    for (int i = 0; i <= d; ++i) {
        if (f.raw(i).is_zero()) continue;
        acc = acc + f.raw(i) * (u.pow(d - i) * v.pow(i));
    }
    return acc;
}

BinaryForm apolar_apply(const BinaryForm& h, const BinaryForm& f) {
    int r = h.degree(), d = f.degree();
    if (r > d) throw std::invalid_argument("apolar_apply: deg h exceeds deg f");
    auto a = f.normalized();
    BinaryForm g = BinaryForm::zero(d - r);
    Int dfac;
    mpz_fac_ui(dfac.get_mpz_t(), d);
    for (int m = 0; m <= d - r; ++m) {
        Rational s(0);
        for (int i = 0; i <= r; ++i) s += a[i + m] * h.raw(i);
        Int mfac, dmrfac;
        mpz_fac_ui(mfac.get_mpz_t(), m);
        mpz_fac_ui(dmrfac.get_mpz_t(), d - r - m);
        g = g + BinaryForm::monomial(d - r, m, Rational(dfac, dmrfac * mfac) * s);
    }
    return g;
}

bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) return false;
    if (f.y_multiplicity() >= 2) return false;
    UPoly p = f.dehomogenized();
    if (upoly::degree(p) <= 0) return true;  // f = c y^m with m <= 1
    return upoly::is_squarefree(p);
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int my = std::min(f.y_multiplicity(), g.y_multiplicity());
    UPoly p = upoly::gcd(f.dehomogenized(), g.dehomogenized());
    p = upoly::primitive_integer(p);
    return BinaryForm::homogenized(p, upoly::degree(p) + my);
}

RealRootCensus real_root_census(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("real_root_census: zero form");
    int my = f.y_multiplicity();
    RealRootCensus census{my, my > 0 ? 1 : 0};
    UPoly p = f.dehomogenized();
    if (upoly::degree(p) < 1) return census;
    for (const auto& [g, mult] : upoly::squarefree_decomposition(p)) {
        int roots = upoly::sturm_real_root_count(g);
        census.tau += mult * roots;
        census.distinct_real += roots;
    }
    return census;
}

std::pair<BinaryForm, Rational> cubic_invariants(const BinaryForm& f) {
    if (f.degree() != 3) throw std::invalid_argument("cubic_invariants: degree must be 3");
    auto a = f.normalized();
    BinaryForm hessian(2, {a[1] * a[3] - a[2] * a[2], a[1] * a[2] - a[0] * a[3],
                           a[0] * a[2] - a[1] * a[1]});
    Rational combo = (a[1] * a[2] - a[0] * a[3]).pow(2) -
                     Rational(4) * (a[1] * a[3] - a[2] * a[2]) * (a[0] * a[2] - a[1] * a[1]);
    return {hessian, Rational(-27) * combo};
}

std::optional<std::pair<int, Rational>> detect_circle_power(const BinaryForm& f) {
    int d = f.degree();
    if (d < 2 || d % 2 != 0) return std::nullopt;
    Rational c = f.raw(0);
    if (c.is_zero()) return std::nullopt;
    int k = d / 2;
    BinaryForm circle(2, {Rational(1), Rational(0), Rational(1)});
    if (f == c * circle.pow(k)) return std::make_pair(k, c);
    return std::nullopt;
}

std::optional<std::tuple<int, int, Rational>> detect_monomial(const BinaryForm& f) {
    int d = f.degree(), which = -1;
    for (int i = 0; i <= d; ++i) {
        if (f.raw(i).is_zero()) continue;
        if (which >= 0) return std::nullopt;
        which = i;
    }
    if (which <= 0 || which >= d) return std::nullopt;
    return std::make_tuple(d - which, which, f.raw(which));
}

std::vector<FieldElement> expand_terms(
    const std::vector<std::pair<FieldElement, LinearForm>>& terms, int degree) {
    std::vector<FieldElement> acc(degree + 1);
    for (const auto& [lambda, form] : terms) {
        auto pc = form.power_coefficients(degree);
        for (int i = 0; i <= degree; ++i) acc[i] = acc[i] + lambda * pc[i];
    }
    return acc;
}

std::optional<BinaryForm> to_rational_form(const std::vector<FieldElement>& coeffs) {
    std::vector<Rational> raw;
    raw.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_rational()) return std::nullopt;
        raw.push_back(c.rat_part());
    }
    return BinaryForm(static_cast<int>(coeffs.size()) - 1, std::move(raw));
}

}  // namespace binlen
