#pragma once

#include "affolab/matrix.hpp"

#include <map>

namespace affolab {

/// Sparse polynomial over exponent vectors; just enough arithmetic for
/// substituting linear maps into monomials.
using Polynomial = std::map<std::vector<int>, Scalar>;

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Substitute x_i -> sum_j m(i,j) x_j into p.
Polynomial poly_substitute(const Polynomial& p, const Matrix& m);

/// Truncated module of polynomial jets vanishing at 0: monomials of degree
/// 1..degree in `vars` variables, graded (degree-major) order with the
/// degree-1 block x_1..x_n first.
class JetModule {
public:
    JetModule(int vars, int degree);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(monomials_.size()); }
    const std::vector<std::vector<int>>& monomials() const { return monomials_; }
    int index_of(const std::vector<int>& mono) const;

    /// Matrix of f -> f o T^{-1} on the monomial coefficient basis;
    /// block-diagonal by degree, with degree-1 block transpose(T^{-1}).
    Matrix action_matrix(const Matrix& t) const;

    Vector to_coefficients(const Polynomial& p) const;
    Polynomial to_polynomial(const Vector& coeffs) const;

private:
    int vars_, degree_;
    std::vector<std::vector<int>> monomials_;
    std::map<std::vector<int>, int> index_;
};

}  // namespace affolab
