#pragma once

#include <optional>
#include <string>

#include "binlen/rational.hpp"

namespace binlen {

enum class FieldKind { rationals, quadratic, reals, complexes };

/// Identifies a coefficient field: Q, a quadratic extension Q(sqrt d) with d
/// squarefree, or the symbolic fields R and C (which carry no elements and
/// act as membership oracles only).
class FieldDescriptor {
public:
    static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::rationals, 0); }
    static FieldDescriptor reals() { return FieldDescriptor(FieldKind::reals, 0); }
    static FieldDescriptor complexes() { return FieldDescriptor(FieldKind::complexes, 0); }

    /// Q(sqrt d). The radicand is reduced to its squarefree part, so
    /// Q(sqrt 8) and Q(sqrt 2) compare equal; a square radicand yields Q.
    static FieldDescriptor quadratic(const Int& d);

    FieldKind kind() const { return kind_; }
    const Int& radicand() const { return radicand_; }

    bool is_quadratic() const { return kind_ == FieldKind::quadratic; }
    /// True for Q and for real quadratic extensions (d > 0).
    bool is_real_subfield() const {
        return kind_ == FieldKind::rationals || (kind_ == FieldKind::quadratic && radicand_ > 0);
    }
    /// True when elements are representable in this implementation (Q, Q(sqrt d)).
    bool has_elements() const {
        return kind_ == FieldKind::rationals || kind_ == FieldKind::quadratic;
    }

    /// Tower ordering: Q embeds everywhere; Q(sqrt d) in itself, in R iff
    /// d > 0, in C always; R in R and C; C in C.
    bool embeds_in(const FieldDescriptor& other) const;

    /// Text syntax: "Q", "Q(sqrt -2)", "Q(i)" (alias for "Q(sqrt -1)"), "R", "C".
    static std::optional<FieldDescriptor> parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !(a == b); }

private:
    FieldDescriptor(FieldKind k, Int d) : kind_(k), radicand_(std::move(d)) {}
    FieldKind kind_;
    Int radicand_;  // squarefree, != 0, 1; meaningful iff kind_ == quadratic
};

/// Element a + b*sqrt(d) of Q or Q(sqrt d). R and C never carry elements.
class FieldElement {
public:
    FieldElement() : a_(0), b_(0), field_(FieldDescriptor::rationals()) {}
    FieldElement(const Rational& r) : a_(r), b_(0), field_(FieldDescriptor::rationals()) {}
    FieldElement(long n) : FieldElement(Rational(n)) {}
    FieldElement(Rational a, Rational b, const FieldDescriptor& field);

    const Rational& rat_part() const { return a_; }
    const Rational& quad_part() const { return b_; }
    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_ == Rational(1); }

    FieldElement conjugate() const { return FieldElement(a_, -b_, field_, nocheck_tag{}); }
    /// x * conjugate(x) = a^2 - d b^2, always rational.
    Rational norm() const;
    FieldElement inverse() const;
    FieldElement pow(unsigned long e) const;

    /// Exact sign; requires a real subfield.
    int sign() const;
    FieldElement abs() const { return sign() >= 0 ? *this : -*this; }

    std::string str() const;

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
    FieldElement operator-() const { return FieldElement(-a_, -b_, field_, nocheck_tag{}); }

    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    /// Arbitrary total order for canonical sorting (not field order).
    static int compare(const FieldElement& x, const FieldElement& y);

private:
    struct nocheck_tag {};
    FieldElement(Rational a, Rational b, FieldDescriptor f, nocheck_tag)
        : a_(std::move(a)), b_(std::move(b)), field_(std::move(f)) {}
    /// Common field of two operands; throws on incompatible quadratic fields.
    static FieldDescriptor join(const FieldElement& x, const FieldElement& y);

    Rational a_, b_;
    FieldDescriptor field_;
};

/// In-field square root. Returns the root with rat_part > 0 (quad_part > 0
/// when the rat_part vanishes); absent when x is not a square in its field.
/// Rejects R and C descriptors.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

/// Reinterprets x in the target field when the source embeds there; the
/// representation changes only for Q -> Q(sqrt d). Absent when the source
/// does not embed (e.g. imaginary quadratic into R).
std::optional<FieldElement> coerce(const FieldElement& x, const FieldDescriptor& target);

}  // namespace binlen
