#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binlen/field.hpp"
#include "binlen/rational.hpp"
#include "binlen/upoly.hpp"

namespace binlen {

/// Homogeneous binary form of degree d over Q, stored by raw coefficients
/// c_i of x^(d-i) y^i. The binomial-normalized coefficients a_j with
/// c_j = binom(d,j) a_j are derived on demand.
class BinaryForm {
public:
    BinaryForm(int degree, std::vector<Rational> raw);
    static BinaryForm zero(int degree);
    static BinaryForm from_normalized(int degree, const std::vector<Rational>& a);
    /// c * x^(d-i) y^i as a degree-d form.
    static BinaryForm monomial(int degree, int i, const Rational& c = Rational(1));

    int degree() const { return degree_; }
    const std::vector<Rational>& raw() const { return raw_; }
    const Rational& raw(int i) const { return raw_[i]; }
    Rational normalized(int j) const { return raw_[j] / Rational(binomial(degree_, j)); }
    std::vector<Rational> normalized() const;

    bool is_zero() const;
    Rational eval(const Rational& x, const Rational& y) const;
    FieldElement eval(const FieldElement& x, const FieldElement& y) const;

    BinaryForm derivative_x() const;
    BinaryForm derivative_y() const;

    /// f(t, 1) as a univariate polynomial in t.
    UPoly dehomogenized() const;
    /// Multiplicity of the linear factor y, i.e. leading raw zeros.
    int y_multiplicity() const;
    /// Degree-d form with p = f(t,1); requires deg p <= d.
    static BinaryForm homogenized(const UPoly& p, int degree);

    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& f);
    /// Product of forms; degrees add.
    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
    BinaryForm pow(int e) const;

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.degree_ == g.degree_ && f.raw_ == g.raw_;
    }
    friend bool operator!=(const BinaryForm& f, const BinaryForm& g) { return !(f == g); }
    /// Canonical order: by degree, then raw coefficients.
    static int compare(const BinaryForm& f, const BinaryForm& g);

    std::string str() const;

private:
    int degree_;
    std::vector<Rational> raw_;
};

/// Linear form alpha*x + beta*y with coefficients in Q or Q(sqrt d),
/// normalized to a canonical representative of its proportionality class:
/// coprime integers with positive leading entry when the direction is
/// rational, otherwise monic in the first nonzero coordinate.
class LinearForm {
public:
    LinearForm(FieldElement alpha, FieldElement beta);
    LinearForm(const Rational& alpha, const Rational& beta)
        : LinearForm(FieldElement(alpha), FieldElement(beta)) {}

    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& beta() const { return beta_; }
    FieldDescriptor field() const;

    bool is_rational() const { return alpha_.is_rational() && beta_.is_rational(); }
    FieldElement eval(const FieldElement& x, const FieldElement& y) const {
        return alpha_ * x + beta_ * y;
    }

    /// The form vanishing exactly at this form's root direction: for
    /// p x + q y returns q x - p y. Applying it twice negates, which is
    /// absorbed by normalization.
    LinearForm dual() const { return LinearForm(beta_, FieldElement(0) - alpha_); }

    /// Coefficients of (alpha x + beta y)^d.
    std::vector<FieldElement> power_coefficients(int d) const;

    friend bool operator==(const LinearForm& u, const LinearForm& v) {
        return u.alpha_ == v.alpha_ && u.beta_ == v.beta_;
    }
    friend bool operator!=(const LinearForm& u, const LinearForm& v) { return !(u == v); }
    friend bool operator<(const LinearForm& u, const LinearForm& v) { return compare(u, v) < 0; }
    static int compare(const LinearForm& u, const LinearForm& v);

    std::string str() const;

private:
    FieldElement alpha_, beta_;
};

struct Factorization {
    FieldDescriptor field = FieldDescriptor::rationals();
    std::vector<std::pair<LinearForm, int>> linear;      // factor, multiplicity
    std::vector<std::pair<BinaryForm, int>> nonlinear;   // irreducible over field
    Rational unit = Rational(1);

    /// Exact product of unit and all factors; equals the input by contract.
    BinaryForm expand() const;
};

/// g(x,y) = f(m00 x + m01 y, m10 x + m11 y); the matrix must be invertible.
BinaryForm apply_linear_change(const BinaryForm& f,
                               const std::array<std::array<Rational, 2>, 2>& m);

/// h(D) f for h of degree r <= d: the degree d-r form whose vanishing is
/// equivalent to the Hankel kernel condition on the coefficients of h.
BinaryForm apolar_apply(const BinaryForm& h, const BinaryForm& f);

/// Complete factorization into irreducibles over Q. Degree cap 12.
Factorization factor_over_Q(const BinaryForm& f);

/// True when f has no repeated linear factor over C.
bool is_squarefree(const BinaryForm& f);

/// Gcd of two forms as a binary form (monic-primitive normalization).
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// The deg(h) pairwise-distinct linear factors of h over K when h is
/// squarefree and every Q-irreducible factor splits over K; absent
/// otherwise. K must be Q or a quadratic extension.
std::optional<std::vector<LinearForm>> splits_distinct(const BinaryForm& h,
                                                       const FieldDescriptor& K);

/// Split predicate for any K: over C it is squarefreeness, over R a full
/// real-root census, over Q and Q(sqrt d) it defers to splits_distinct.
bool splits_distinct_over(const BinaryForm& h, const FieldDescriptor& K);

struct RealRootCensus {
    int tau;            // real linear factors with multiplicity, y included
    int distinct_real;  // without multiplicity
};
RealRootCensus real_root_census(const BinaryForm& f);

/// For a cubic: the Hessian in normalized coefficients and the discriminant.
std::pair<BinaryForm, Rational> cubic_invariants(const BinaryForm& f);

/// Detects f = c * (x^2 + y^2)^k, returning (k, c).
std::optional<std::pair<int, Rational>> detect_circle_power(const BinaryForm& f);

/// Detects f = c * x^a y^b with a, b >= 1, returning (a, b, c).
std::optional<std::tuple<int, int, Rational>> detect_monomial(const BinaryForm& f);

/// Exact expansion of sum lambda_k (alpha_k x + beta_k y)^degree in the
/// ambient quadratic field.
std::vector<FieldElement> expand_terms(
    const std::vector<std::pair<FieldElement, LinearForm>>& terms, int degree);

/// Rational form from field coefficients; absent when any quad part remains.
std::optional<BinaryForm> to_rational_form(const std::vector<FieldElement>& coeffs);

}  // namespace binlen
