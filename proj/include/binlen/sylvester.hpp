#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "binlen/binform.hpp"
#include "binlen/field.hpp"
#include "binlen/linalg.hpp"

namespace binlen {

/// The (d-r+1) x (r+1) matrix of normalized coefficients a_(l+t) whose
/// kernel vectors are coefficient lists of apolar forms of degree r.
struct HankelMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> entries;  // row-major

    const Rational& at(int i, int j) const { return entries[i * cols + j]; }
    DenseMatrix<Rational> dense() const;
};

HankelMatrix hankel(const BinaryForm& f, int r);

/// Canonical basis of the right nullspace: primitive integer rows with
/// positive leading entry, strictly increasing leading indices and pairwise
/// distinct trailing indices. Empty for a trivial kernel.
std::vector<std::vector<Rational>> kernel_basis(const HankelMatrix& m);

/// Degree-r form from coordinates in a kernel basis.
BinaryForm kernel_member(const std::vector<std::vector<Rational>>& basis,
                         const std::vector<Int>& coords, int r);

/// A verified witness that f admits a representation of length r: a kernel
/// member h of H_r(f), split into r distinct linear factors when the field
/// supports explicit elements.
struct SylvesterCertificate {
    int r = 0;
    BinaryForm h = BinaryForm::zero(0);
    FieldDescriptor field = FieldDescriptor::complexes();
    std::vector<LinearForm> factors;  // empty when not representable over field
    std::vector<Int> kernel_coords;
};

/// Exact representation f = sum lambda_k (alpha_k x + beta_k y)^d with
/// pairwise distinct summands. Validated at construction: zero-lambda terms
/// are dropped, forms are canonicalized, and the expansion is checked
/// against the target bit for bit.
class Representation {
public:
    struct Term {
        FieldElement lambda;
        LinearForm form;
    };
    struct RawTerm {
        FieldElement lambda, alpha, beta;
    };

    static Representation make(const FieldDescriptor& field, std::vector<RawTerm> raw,
                               BinaryForm target);
    static Representation make(const FieldDescriptor& field,
                               const std::vector<std::pair<FieldElement, LinearForm>>& terms,
                               BinaryForm target);

    const FieldDescriptor& field() const { return field_; }
    int degree() const { return target_.degree(); }
    int length() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const BinaryForm& target() const { return target_; }

private:
    Representation(FieldDescriptor field, std::vector<Term> terms, BinaryForm target)
        : field_(std::move(field)), terms_(std::move(terms)), target_(std::move(target)) {}
    FieldDescriptor field_;
    std::vector<Term> terms_;
    BinaryForm target_;
};

/// Exact length value or interval, with provenance for both bounds.
struct LengthResult {
    int lower = 1;
    int upper = 1;
    bool exact = false;
    std::string lower_provenance;
    std::string upper_provenance;
    std::optional<Representation> witness;
    std::optional<SylvesterCertificate> certificate;
};

struct MinLengthC {
    int r;
    SylvesterCertificate certificate;
};

/// Smallest r with a squarefree member in ker H_r(f). Sampling is by
/// deterministic integer combinations; exhaustion is decided exactly by a
/// discriminant identity test on a grid exceeding the degree bound.
MinLengthC min_length_over_C(const BinaryForm& f);

/// Solves the power-sum linear system for lambda over K given the summand
/// forms; absent when inconsistent. Zero-lambda terms are dropped from the
/// returned representation.
std::optional<Representation> recover_coefficients(const BinaryForm& f,
                                                   const std::vector<LinearForm>& forms,
                                                   const FieldDescriptor& K);

/// First kernel combination (increasing height, then lexicographic) whose
/// form splits into distinct linear factors over K. Absence means the
/// bounded search failed, not impossibility.
std::optional<SylvesterCertificate> kernel_splitting_search(const BinaryForm& f, int r,
                                                            const FieldDescriptor& K,
                                                            long height);

/// Hook for theorem-backed exclusions: returns the provenance string when
/// no length-r representation over K exists.
using RankCertifier =
    std::function<std::optional<std::string>(const BinaryForm&, int, const FieldDescriptor&)>;

/// Semi-decision procedure for L_K(f), K = Q or Q(sqrt d): exact when a
/// witness is found with everything below excluded, or when a theorem
/// certifies the value; otherwise an interval with upper = d from the
/// guaranteed degree-d construction.
LengthResult min_length_over_K(const BinaryForm& f, const FieldDescriptor& K, long height,
                               const RankCertifier& certifier = {});

/// Degree-d Sylvester form split over Q with distinct factors, plus the
/// recovered length <= d representation. Succeeds for every nonzero form.
std::pair<BinaryForm, Representation> universal_sylvester_construction(
    const BinaryForm& f, const FieldDescriptor& K);

namespace detail {

/// Canonical enumeration of primitive integer coordinate vectors by
/// increasing max-norm shells, lexicographic within a shell, first nonzero
/// positive. Calls fn for each; stops early when fn returns true.
void for_each_primitive_vector(int dim, long height,
                               const std::function<bool(const std::vector<long>&)>& fn);

/// Squarefree member of the span, or a certified negative.
struct SquarefreeDecision {
    std::optional<std::pair<BinaryForm, std::vector<Int>>> member;
};
SquarefreeDecision find_squarefree_member(const std::vector<std::vector<Rational>>& basis, int r);

}  // namespace detail
}  // namespace binlen
