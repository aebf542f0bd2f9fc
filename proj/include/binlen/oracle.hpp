#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "binlen/sylvester.hpp"

namespace binlen {

struct SearchBudget {
    long height = 3;  // max |coefficient| of candidate linear forms
    int max_r = 0;    // 0 means the degree of the target
};

/// Ground-truth expansion of a representation by plain binomial expansion;
/// every representation stored anywhere re-expands to its target, and this
/// is the check used by the acceptance suite.
BinaryForm expand_representation(const Representation& rep);

/// Candidate linear forms with coprime integer coefficients up to the
/// height, first nonzero positive, sorted by (height, slope) with the
/// y-form last among equal heights.
std::vector<LinearForm> enumerate_forms(long height);

/// Exhaustive minimal-length search over Q: tries r-subsets of the
/// candidate forms in canonical order and returns the first consistent
/// honest representation. The result is an upper bound for L_Q(f), and
/// equals it when r matches the Hankel lower bound.
std::optional<std::pair<int, Representation>> brute_force_min_length_Q(
    const BinaryForm& f, const SearchBudget& budget);

/// The d+1 forms i x + (d-i) y, 0 <= i <= d; their d-th powers form a basis
/// of the degree-d forms (the power matrix is checked nonsingular).
std::vector<LinearForm> biermann_basis(int d);

/// The closed three-term family 3(a-b)(a+2b)(2a+b) x^2 y =
/// (a+2b)(ax+y)^3 - (2a+b)(bx+y)^3 + (a-b)(-(a+b)x+y)^3, rejected at the
/// degenerate parameter pairs.
Representation e3reps_family(const Rational& a, const Rational& b);

}  // namespace binlen
