#pragma once

#include "affolab/affine.hpp"

#include <optional>

namespace affolab {

/// Q-coordinates of an LSA element: every Q(sqrt(d)) entry contributes its
/// rational and surd parts separately, so Q-linear span questions become
/// exact rational linear algebra.
Vector lsa_flatten(const LSAElement& x);

struct ClosureResult;

/// Basis of a product-closed Q-span inside aff(R^n), with exact rational
/// structure constants e_i e_j = sum_k sc(i,j,k) e_k.
class AlgebraBasis {
public:
    int size() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return ambient_dim_; }
    bool commutative() const { return commutative_; }
    const std::vector<LSAElement>& elements() const { return basis_; }
    const LSAElement& element(int i) const { return basis_.at(static_cast<size_t>(i)); }

    /// sc(i,j) = coordinates of e_i e_j in the basis.
    const Vector& structure_constants(int i, int j) const;

    /// Coordinates of x in the basis, or nullopt when x is outside the Q-span.
    std::optional<Vector> coordinates(const LSAElement& x) const;

    LSAElement combine(const Vector& coords) const;

    /// Matrix of left multiplication by the coordinate vector x.
    Matrix left_multiplication(const Vector& coords) const;

private:
    friend struct ClosureResult;
    friend ClosureResult span_closure(const std::vector<LSAElement>& gens);
    friend AlgebraBasis quotient_algebra(const AlgebraBasis& basis, const LSAElement& x);
    std::vector<LSAElement> basis_;
    std::vector<std::vector<Vector>> sc_;
    int ambient_dim_ = 0;
    bool commutative_ = true;
};

struct ClosureResult {
    bool closed = false;
    std::optional<AlgebraBasis> basis;         // closed only
    std::optional<LSAElement> witness;         // not closed: a product outside the span
    int witness_i = -1, witness_j = -1;        // basis indices of the offending product
};

/// Q-span of the generators and its product closure. Q(sqrt(d)) coordinates
/// are flattened to a doubled rational space for all membership tests.
ClosureResult span_closure(const std::vector<LSAElement>& gens);

/// A nonzero x in the span with x*x = 0, or nullopt when the algebra has no
/// nonzero nilpotents. Method: nilradical as the kernel of the unitalized
/// trace form of the left-regular representation (exact, characteristic 0),
/// then repeated squaring of the first radical basis vector.
std::optional<LSAElement> find_square_zero(const AlgebraBasis& basis);

/// Same scan, but keeps only candidates x whose line Qx is a two-sided ideal
/// of the algebra, as the quotient step requires.
std::optional<LSAElement> find_square_zero_ideal(const AlgebraBasis& basis);

/// True iff x*b and b*x stay in Qx for every basis element b.
bool spans_ideal(const AlgebraBasis& basis, const LSAElement& x);

/// Quotient by the line Qx; requires x in the span, x*x = 0 and Qx an ideal
/// (all checked). The quotient is realized concretely in aff(R^{m-1}) through
/// the left-regular representation y -> (L_y, y).
AlgebraBasis quotient_algebra(const AlgebraBasis& basis, const LSAElement& x);

/// Iterated square-zero quotients down to dimension 2 (the chain includes the
/// starting algebra). Throws std::runtime_error with stage information when
/// no suitable square-zero element exists before dimension 2.
std::vector<AlgebraBasis> reduction_chain(const std::vector<LSAElement>& gens);

}  // namespace affolab
