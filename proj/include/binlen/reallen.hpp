#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binlen/sylvester.hpp"

namespace binlen {

/// A real representation ordered by the angle of its summand forms in
/// (-pi/2, pi/2]: slopes beta/alpha ascending, the form y last. Each summand
/// is normalized to positive leading coefficient with the sign flip of odd
/// powers absorbed into lambda. Only the signs and the cyclic order matter,
/// so no angle is ever evaluated numerically.
struct AngularRepresentation {
    struct Entry {
        FieldElement lambda;
        LinearForm form;
    };
    std::vector<Entry> entries;
    int degree = 0;
};

AngularRepresentation to_angular(const Representation& rep);

/// Sign changes in (lambda_1, ..., lambda_r, (-1)^d lambda_1).
int sign_change_count(const AngularRepresentation& rep, int d);

struct SignRuleReport {
    int tau = 0;
    int sigma = 0;
    bool ok = false;
};

/// tau <= sigma for every exact real representation; ok records the check.
SignRuleReport verify_1864(const Representation& rep);

/// Permanent runtime assertion applied to every representation the system
/// produces over a real field; throws when the sign rule fails.
void assert_sign_rule(const Representation& rep);

/// Bounds for L_R(f): lower = max(L_C, tau), upper = d, with exact values
/// where the classification theorems decide them (tau = d, cubics,
/// quartics, circle powers, or a minimal Sylvester certificate already
/// split over R).
LengthResult real_length_bounds(const BinaryForm& f);

struct QuarticRealLength {
    int length = 0;
    std::optional<Representation> witness;
    std::string provenance;
};

/// Exact L_R for quartics: 4 iff the form is a product of four real linear
/// factors; otherwise 1, 2 or 3 decided by Hankel ranks. A witness is
/// produced when the one-parameter construction lands on a rational (or
/// supported quadratic) parameter.
QuarticRealLength quartic_real_length(const BinaryForm& f);

}  // namespace binlen
