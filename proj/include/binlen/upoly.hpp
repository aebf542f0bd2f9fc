#pragma once

#include <utility>
#include <vector>

#include "binlen/rational.hpp"

namespace binlen {

/// Dense univariate polynomial over Q, coefficient of t^i at index i.
/// Normalized representation has a nonzero leading coefficient; the zero
/// polynomial is the empty vector (degree -1).
using UPoly = std::vector<Rational>;

namespace upoly {

UPoly normalized(UPoly p);
int degree(const UPoly& p);
bool is_zero(const UPoly& p);
Rational lead(const UPoly& p);
Rational eval(const UPoly& p, const Rational& t);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
UPoly derivative(const UPoly& p);

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
/// Exact quotient; throws when the division leaves a remainder.
UPoly divexact(const UPoly& a, const UPoly& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

bool is_squarefree(const UPoly& p);

/// Yun decomposition: returns {(g_i, i)} with p = lead * prod g_i^i, the g_i
/// squarefree, monic and pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// Number of distinct real roots of a nonzero polynomial via Sturm chains.
int sturm_real_root_count(const UPoly& p);

/// Primitive integer scaling: multiplies by the unique positive rational
/// making the coefficients coprime integers with positive leading term.
UPoly primitive_integer(const UPoly& p);

}  // namespace upoly
}  // namespace binlen
