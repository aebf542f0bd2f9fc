#include "binlen/formio.hpp"

#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

namespace binlen {

namespace {

struct Monomial {
    Rational coeff;
    int xexp = 0, yexp = 0;
};

Monomial parse_monomial(const std::string& term) {
    Monomial mono;
    mono.coeff = Rational(1);
    std::size_t i = 0;
    // coefficient: digits with optional /digits
    std::size_t start = i;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    if (i < term.size() && term[i] == '/' && i > start) {
        ++i;
        std::size_t den = i;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
        if (i == den) throw ParseError("malformed rational coefficient in '" + term + "'");
    }
    if (i > start) {
        auto c = Rational::parse(term.substr(start, i - start));
        if (!c) throw ParseError("malformed coefficient in '" + term + "'");
        mono.coeff = *c;
    }
    auto read_var = [&](char v) -> int {
        if (i >= term.size() || term[i] != v) return 0;
        ++i;
        if (i < term.size() && term[i] == '^') {
            ++i;
            std::size_t e = i;
            long value = 0;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
                value = value * 10 + (term[i] - '0');
                if (value > 512) throw ParseError("exponent too large in '" + term + "'");
                ++i;
            }
            if (i == e) throw ParseError("malformed exponent in '" + term + "'");
            return static_cast<int>(value);
        }
        return 1;
    };
    mono.xexp = read_var('x');
    mono.yexp = read_var('y');
    if (i != term.size()) throw ParseError("malformed token '" + term + "'");
    if (mono.xexp == 0 && mono.yexp == 0 && i == 0)
        throw ParseError("empty monomial");
    return mono;
}

}  // namespace

BinaryForm parse_form(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty form");
    std::vector<std::pair<int, Monomial>> monos;  // (sign, monomial)
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        if (j == i) throw ParseError("dangling sign in '" + text + "'");
        monos.emplace_back(sign, parse_monomial(s.substr(i, j - i)));
        i = j;
    }
    int degree = -1;
    for (const auto& [sign, mono] : monos) {
        int total = mono.xexp + mono.yexp;
        if (total == 0) throw ParseError("constant term: form is not homogeneous");
        if (degree < 0) degree = total;
        if (total != degree) throw ParseError("form is not homogeneous");
    }
    std::vector<Rational> raw(degree + 1);
    for (const auto& [sign, mono] : monos)
        raw[mono.yexp] += Rational(sign) * mono.coeff;
    BinaryForm f(degree, std::move(raw));
    if (f.is_zero()) throw ParseError("zero form");
    return f;
}

BinaryForm parse_coeffs(const std::string& text) {
    std::vector<Rational> raw;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        auto c = Rational::parse(text.substr(i, j - i));
        if (!c) throw ParseError("malformed coefficient list");
        raw.push_back(*c);
        i = j + 1;
        if (j == text.size()) break;
    }
    if (raw.size() < 2) throw ParseError("coefficient list needs degree >= 1");
    int degree = static_cast<int>(raw.size()) - 1;
    BinaryForm f(degree, std::move(raw));
    if (f.is_zero()) throw ParseError("zero form");
    return f;
}

Json rational_to_json(const Rational& r) {
    return Json(r.num().get_str() + "/" + r.den().get_str());
}

namespace {

Rational rational_from_json(const Json& j) {
    auto r = Rational::parse(j.get<std::string>());
    if (!r) throw ParseError("bad rational in JSON: " + j.dump());
    return *r;
}

}  // namespace

Json form_to_json(const BinaryForm& f) {
    Json j;
    j["degree"] = f.degree();
    Json raw = Json::array(), norm = Json::array();
    for (int i = 0; i <= f.degree(); ++i) {
        raw.push_back(rational_to_json(f.raw(i)));
        norm.push_back(rational_to_json(f.normalized(i)));
    }
    j["raw"] = std::move(raw);
    j["normalized"] = std::move(norm);
    j["text"] = f.str();
    return j;
}

BinaryForm form_from_json(const Json& j) {
    int degree = j.at("degree").get<int>();
    std::vector<Rational> raw;
    for (const auto& c : j.at("raw")) raw.push_back(rational_from_json(c));
    return BinaryForm(degree, std::move(raw));
}

Json field_element_to_json(const FieldElement& x) {
    if (x.is_rational()) return rational_to_json(x.rat_part());
    Json j;
    j["a"] = rational_to_json(x.rat_part());
    j["b"] = rational_to_json(x.quad_part());
    j["d"] = static_cast<long>(x.field().radicand().get_si());
    return j;
}

namespace {

FieldElement field_element_from_json(const Json& j, const FieldDescriptor& K) {
    if (j.is_string()) {
        Rational r = rational_from_json(j);
        auto coerced = coerce(FieldElement(r), K);
        return *coerced;
    }
    Rational a = rational_from_json(j.at("a"));
    Rational b = rational_from_json(j.at("b"));
    FieldDescriptor field = FieldDescriptor::quadratic(Int(j.at("d").get<long>()));
    return FieldElement(a, b, field);
}

}  // namespace

Json linear_form_to_json(const LinearForm& lf) {
    Json j;
    j["alpha"] = field_element_to_json(lf.alpha());
    j["beta"] = field_element_to_json(lf.beta());
    j["text"] = lf.str();
    return j;
}

Json representation_to_json(const Representation& rep) {
    Json j;
    j["field"] = rep.field().str();
    j["degree"] = rep.degree();
    j["target"] = form_to_json(rep.target());
    Json terms = Json::array();
    for (const auto& t : rep.terms()) {
        Json term;
        term["lambda"] = field_element_to_json(t.lambda);
        term["form"] = linear_form_to_json(t.form);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Representation representation_from_json(const Json& j) {
    auto K = FieldDescriptor::parse(j.at("field").get<std::string>());
    if (!K || !K->has_elements()) throw ParseError("bad representation field");
    BinaryForm target = form_from_json(j.at("target"));
    std::vector<Representation::RawTerm> raw;
    for (const auto& term : j.at("terms")) {
        raw.push_back(Representation::RawTerm{
            field_element_from_json(term.at("lambda"), *K),
            field_element_from_json(term.at("form").at("alpha"), *K),
            field_element_from_json(term.at("form").at("beta"), *K)});
    }
    return Representation::make(*K, std::move(raw), std::move(target));
}

Json certificate_to_json(const SylvesterCertificate& cert) {
    Json j;
    j["r"] = cert.r;
    Json coords = Json::array();
    for (const auto& c : cert.kernel_coords) coords.push_back(c.get_str());
    j["kernel_coords"] = std::move(coords);
    j["h"] = form_to_json(cert.h);
    Json factors = Json::array();
    for (const auto& lf : cert.factors) factors.push_back(linear_form_to_json(lf));
    j["factors"] = std::move(factors);
    j["field"] = cert.field.str();
    return j;
}

Json length_result_to_json(const BinaryForm& f, const FieldDescriptor& K,
                           const LengthResult& res) {
    Json j;
    j["form"] = form_to_json(f);
    j["field"] = K.str();
    Json len;
    len["lower"] = res.lower;
    len["upper"] = res.upper;
    len["exact"] = res.exact;
    Json prov;
    prov["lower"] = res.lower_provenance;
    prov["upper"] = res.upper_provenance;
    len["provenance"] = std::move(prov);
    j["length"] = std::move(len);
    if (res.certificate) j["sylvester_form"] = certificate_to_json(*res.certificate);
    if (res.witness) j["representation"] = representation_to_json(*res.witness)["terms"];
    if (K.kind() == FieldKind::reals ||
        (K.is_real_subfield() && res.witness && res.witness->length() >= 2)) {
        j["tau"] = real_root_census(f).tau;
        if (res.witness && res.witness->length() >= 1)
            j["sigma"] = sign_change_count(to_angular(*res.witness), f.degree());
    }
    return j;
}

Json cabinet_to_json(const BinaryForm& f, const Cabinet& cab) {
    Json j;
    j["form"] = form_to_json(f);
    Json entries = Json::array();
    for (const auto& [K, res] : cab.entries)
        entries.push_back(length_result_to_json(f, K, res));
    j["entries"] = std::move(entries);
    Json summary = Json::array();
    for (int v : cab.summary) summary.push_back(v);
    j["summary"] = std::move(summary);
    return j;
}

}  // namespace binlen
