#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "binlen/special.hpp"

namespace binlen {

using Json = nlohmann::ordered_json;

/// Parses signed monomials in x and y with ^ exponents and integer or
/// rational coefficients, e.g. "3x^5-20x^3y^2+10xy^4". The degree is the
/// common total degree of the monomials; inhomogeneous or zero input is a
/// parse error.
BinaryForm parse_form(const std::string& text);

/// Raw coefficient list "c0,c1,...,cd" by descending x-power.
BinaryForm parse_coeffs(const std::string& text);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Json field_element_to_json(const FieldElement& x);
Json linear_form_to_json(const LinearForm& lf);
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);
Json certificate_to_json(const SylvesterCertificate& cert);
Json length_result_to_json(const BinaryForm& f, const FieldDescriptor& K,
                           const LengthResult& res);
Json cabinet_to_json(const BinaryForm& f, const Cabinet& cab);

}  // namespace binlen
