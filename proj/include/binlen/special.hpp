#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "binlen/cyclotomic.hpp"
#include "binlen/reallen.hpp"
#include "binlen/sylvester.hpp"

namespace binlen {

/// Complete classification of cubic lengths over any K: 1 for cubes
/// (detected by Hankel rank), 3 for repeated non-cubes, and for squarefree
/// cubics 2 exactly when sqrt(-3 disc) lies in K.
LengthResult cubic_length(const BinaryForm& f, const FieldDescriptor& K);

/// Detects f = l^(d-1) l' with distinct linear forms, the exact
/// characterization of L_C(f) = d. Works over Q via gcd with the partials.
std::optional<std::pair<LinearForm, LinearForm>> top_length_detect(const BinaryForm& f);

/// Verifies the root-of-unity representation of x^k y^k: expands
/// sum_j (zeta^j w x + zeta^-j w^-1 y)^2k in Q(zeta_(2k+2)) and compares
/// with (k+1) binom(2k,k) x^k y^k; also checks the power-sum cancellation
/// coefficient by coefficient.
bool xkyk_identity_verify(int k, const Rational& w);

/// L_K((x^2+y^2)^k): k+1 over C and R always; over Q and quadratic fields
/// exactly when tan(pi/(k+1)) lies in K, decided via the classical table of
/// rational/quadratic tangent values.
LengthResult circle_power_length(int k, const FieldDescriptor& K);

/// tan(pi/m) when it is rational or quadratic; the element lives in Q or
/// Q(sqrt e) with e in {2, 3}.
std::optional<FieldElement> tan_pi_over(int m);

/// The quartic diophantine form whose square values certify length 3 for
/// x^4 + 6(a/b) x^2 y^2 + y^4 over Q.
Int gamma_quartic(const Int& a, const Int& b, const Int& m, const Int& n);

struct GammaWitness {
    Int m, n, root;
};

/// First (m, n) with gcd 1, m <= n, and gamma a nonzero perfect square.
/// Absence below the bound is inconclusive unless a theorem applies.
std::optional<GammaWitness> gamma_square_search(const Int& a, const Int& b, long bound);

/// Exhaustive check that 27 X^2 + 5 Y^2 = Z^2 has no solution with
/// 0 < max(|X|,|Y|,|Z|) <= bound, the bounded half of the descent argument
/// for lambda = 1/2. The mod-5 step is checked by residue enumeration.
bool descent_27_5_insoluble(long bound);

/// Two-power descent: when f has an honest length-2 representation over C,
/// produces u in K and the representation over K (u square) or over
/// K(sqrt u) (K = Q only). The summands are conjugate over the extension.
std::optional<std::pair<Rational, Representation>> two_power_descend(const BinaryForm& f,
                                                                     const FieldDescriptor& K);

/// f_l = sum alpha_j^l (x + alpha_j y)^d for the roots alpha_j of a monic
/// squarefree g, computed through Newton's identities without touching the
/// roots themselves.
BinaryForm power_sum_family(const BinaryForm& g, int ell, int d);

struct Cabinet {
    std::vector<std::pair<FieldDescriptor, LengthResult>> entries;
    std::set<int> summary;  // exact lengths achieved
};

/// Full dispatcher for any K including R and C: theorem classifications
/// first, then the Sylvester engine with theorem-backed exclusions.
LengthResult length_over(const BinaryForm& f, const FieldDescriptor& K, long height);

/// Lengths over a set of fields with the cabinet constraints verified:
/// containment in the allowed length set, monotonicity along embeddings,
/// and the honest-collision bound for every witness pair.
Cabinet cabinet(const BinaryForm& f, const std::vector<FieldDescriptor>& fields, long height);

}  // namespace binlen
