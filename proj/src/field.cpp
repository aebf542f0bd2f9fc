#include "binlen/field.hpp"

#include <sstream>

namespace binlen {

FieldDescriptor FieldDescriptor::quadratic(const Int& d) {
    if (d == 0) throw std::invalid_argument("FieldDescriptor: radicand must be nonzero");
    auto [sf, s] = squarefree_decompose(d);
    if (sf == 1) return rationals();
    return FieldDescriptor(FieldKind::quadratic, sf);
}

bool FieldDescriptor::embeds_in(const FieldDescriptor& other) const {
    switch (kind_) {
        case FieldKind::rationals:
            return true;
        case FieldKind::quadratic:
            if (other.kind_ == FieldKind::quadratic) return radicand_ == other.radicand_;
            if (other.kind_ == FieldKind::reals) return radicand_ > 0;
            return other.kind_ == FieldKind::complexes;
        case FieldKind::reals:
            return other.kind_ == FieldKind::reals || other.kind_ == FieldKind::complexes;
        case FieldKind::complexes:
            return other.kind_ == FieldKind::complexes;
    }
    return false;
}

std::optional<FieldDescriptor> FieldDescriptor::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "R") return reals();
    if (text == "C") return complexes();
    if (text == "Q(i)") return quadratic(Int(-1));
    const std::string prefix = "Q(sqrt ";
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 &&
        text.back() == ')') {
        std::string body = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        std::size_t i = (body[0] == '-' || body[0] == '+') ? 1 : 0;
        if (i == body.size()) return std::nullopt;
        for (std::size_t j = i; j < body.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(body[j]))) return std::nullopt;
        Int d(body, 10);
        if (d == 0 || squarefree_decompose(d).first == 1) return std::nullopt;
        return quadratic(d);
    }
    return std::nullopt;
}

std::string FieldDescriptor::str() const {
    switch (kind_) {
        case FieldKind::rationals: return "Q";
        case FieldKind::reals: return "R";
        case FieldKind::complexes: return "C";
        case FieldKind::quadratic: return "Q(sqrt " + radicand_.get_str() + ")";
    }
    return "?";
}

FieldElement::FieldElement(Rational a, Rational b, const FieldDescriptor& field)
    : a_(std::move(a)), b_(std::move(b)), field_(field) {
    if (!field.has_elements())
        throw std::invalid_argument("FieldElement: R and C carry no element representation");
    if (field.kind() == FieldKind::rationals && !b_.is_zero())
        throw std::invalid_argument("FieldElement: nonzero quad_part in Q");
    if (field.kind() == FieldKind::rationals) b_ = Rational(0);
}

FieldDescriptor FieldElement::join(const FieldElement& x, const FieldElement& y) {
    if (x.field_ == y.field_) return x.field_;
    if (x.field_.kind() == FieldKind::rationals) return y.field_;
    if (y.field_.kind() == FieldKind::rationals) return x.field_;
    throw std::invalid_argument("FieldElement: mixed quadratic fields " + x.field_.str() + " and " +
                                y.field_.str());
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    auto f = FieldElement::join(x, y);
    return FieldElement(x.a_ + y.a_, x.b_ + y.b_, f, FieldElement::nocheck_tag{});
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    auto f = FieldElement::join(x, y);
    return FieldElement(x.a_ - y.a_, x.b_ - y.b_, f, FieldElement::nocheck_tag{});
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    auto f = FieldElement::join(x, y);
    if (f.kind() == FieldKind::rationals)
        return FieldElement(x.a_ * y.a_, Rational(0), f, FieldElement::nocheck_tag{});
    Rational d(f.radicand());
    return FieldElement(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, f,
                        FieldElement::nocheck_tag{});
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

bool operator==(const FieldElement& x, const FieldElement& y) {
    // Elements compare by value; 1/2 in Q equals 1/2 viewed in Q(sqrt 2).
    return x.a_ == y.a_ && x.b_ == y.b_;
}

Rational FieldElement::norm() const {
    if (is_rational()) return a_ * a_;
    return a_ * a_ - Rational(field_.radicand()) * b_ * b_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: division by zero");
    if (is_rational()) return FieldElement(a_.inverse(), Rational(0), field_, nocheck_tag{});
    Rational n = norm();
    // norm vanishes only at zero since the radicand is squarefree (not a square)
    return FieldElement(a_ / n, -b_ / n, field_, nocheck_tag{});
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement acc(Rational(1), Rational(0), field_, nocheck_tag{});
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int FieldElement::sign() const {
    if (!field_.is_real_subfield())
        throw std::domain_error("FieldElement: sign undefined outside real subfields");
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    Rational d(field_.radicand());
    // sign of a + b sqrt(d), d > 0: compare a^2 with d b^2 when signs differ
    if (a_.sign() > 0 && b_.sign() > 0) return 1;
    if (a_.sign() < 0 && b_.sign() < 0) return -1;
    Rational lhs = a_ * a_, rhs = d * b_ * b_;
    if (lhs == rhs) return 0;  // impossible for squarefree d, kept for safety
    bool a_dominates = lhs > rhs;
    return a_dominates ? a_.sign() : b_.sign();
}

std::string FieldElement::str() const {
    if (is_rational()) return a_.str();
    std::ostringstream os;
    bool wrote = false;
    if (!a_.is_zero()) {
        os << a_.str();
        wrote = true;
    }
    if (b_.sign() > 0 && wrote) os << "+";
    if (b_ == Rational(-1))
        os << "-";
    else if (b_ != Rational(1))
        os << b_.str() << "*";
    os << "sqrt(" << field_.radicand().get_str() << ")";
    return os.str();
}

int FieldElement::compare(const FieldElement& x, const FieldElement& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_ ? -1 : 1;
    if (x.b_ != y.b_) return x.b_ < y.b_ ? -1 : 1;
    return 0;
}

std::optional<FieldElement> field_sqrt(const FieldElement& x) {
    const auto& K = x.field();
    if (!K.has_elements())
        throw std::invalid_argument("field_sqrt: descriptor must be Q or a quadratic extension");
    if (x.is_zero()) return FieldElement(Rational(0), Rational(0), K);

    auto normalize = [&](Rational p, Rational q) -> FieldElement {
        // pick the root with rat_part > 0, or quad_part > 0 when rat_part = 0
        if (p.sign() < 0 || (p.is_zero() && q.sign() < 0)) {
            p = -p;
            q = -q;
        }
        return FieldElement(std::move(p), std::move(q), K);
    };

    if (K.kind() == FieldKind::rationals) {
        auto r = sqrt_exact(x.rat_part());
        if (!r) return std::nullopt;
        return normalize(*r, Rational(0));
    }

    Rational d(K.radicand());
    const Rational& a = x.rat_part();
    const Rational& b = x.quad_part();
    if (b.is_zero()) {
        // rational root, or a pure multiple of sqrt(d)
        if (auto r = sqrt_exact(a)) return normalize(*r, Rational(0));
        if (auto r = sqrt_exact(a / d)) return normalize(Rational(0), *r);
        return std::nullopt;
    }
    // (p + q sqrt d)^2 = x with q = b/(2p) forces p^2 = (a +- sqrt(a^2 - d b^2))/2
    auto s = sqrt_exact(a * a - d * b * b);
    if (!s) return std::nullopt;
    for (const Rational& t : {*s, -*s}) {
        Rational p2 = (a + t) / Rational(2);
        if (auto p = sqrt_exact(p2)) {
            if (p->is_zero()) continue;
            Rational q = b / (Rational(2) * *p);
            return normalize(*p, q);
        }
    }
    return std::nullopt;
}

std::optional<FieldElement> coerce(const FieldElement& x, const FieldDescriptor& target) {
    if (!x.field().embeds_in(target)) return std::nullopt;
    if (!target.has_elements()) return x;  // membership in R/C affirmed, representation unchanged
    if (x.field() == target) return x;
    return FieldElement(x.rat_part(), Rational(0), target);
}

}  // namespace binlen
