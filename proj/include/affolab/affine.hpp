#pragma once

#include "affolab/matrix.hpp"

namespace affolab {

/// Invertible affine transformation x -> linear*x + translation.
class AffineMap {
public:
    AffineMap(Matrix linear, Vector translation);

    static AffineMap identity(int n);
    static AffineMap pure_translation(const Vector& v);

    int dim() const { return linear_.rows(); }
    const Matrix& linear() const { return linear_; }
    const Vector& translation() const { return translation_; }

    Vector apply(const Vector& x) const;
    bool is_identity() const;
    bool is_translation() const { return linear_ == Matrix::identity(dim()); }

    friend bool operator==(const AffineMap& f, const AffineMap& g) {
        return f.linear_ == g.linear_ && f.translation_ == g.translation_;
    }
    friend bool operator!=(const AffineMap& f, const AffineMap& g) { return !(f == g); }

    std::string key() const { return linear_.key() + "#" + translation_.key(); }
    std::string to_string() const;

private:
    Matrix linear_;
    Vector translation_;
};

/// (f o g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);

/// Constant-coefficient antisymmetric bilinear form Omega(u,v) = u^T Omega v.
class BilinearForm {
public:
    explicit BilinearForm(Matrix omega);

    int dim() const { return omega_.rows(); }
    const Matrix& matrix() const { return omega_; }
    Scalar eval(const Vector& u, const Vector& v) const;

    /// Nondegenerate and even-dimensional.
    bool is_symplectic() const;

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
        return a.omega_ == b.omega_;
    }
    friend bool operator!=(const BilinearForm& a, const BilinearForm& b) { return !(a == b); }

private:
    Matrix omega_;
};

/// f^T Omega f on the linear part; translations act trivially on a
/// constant-coefficient form.
BilinearForm pullback_form(const AffineMap& f, const BilinearForm& omega);

enum class LagrangianStatus { lagrangian, wrong_rank, not_isotropic };

/// Requires omega symplectic (throws otherwise). Distinguishes a span of the
/// wrong rank from a non-isotropic one.
LagrangianStatus lagrangian_status(const std::vector<Vector>& span, const BilinearForm& omega);
bool is_lagrangian(const std::vector<Vector>& span, const BilinearForm& omega);

/// Element (C, c) of aff(R^n) with the associative product (C,c)(D,d) = (CD, C d).
struct LSAElement {
    Matrix C;
    Vector c;

    LSAElement() = default;
    LSAElement(Matrix C_, Vector c_);

    static LSAElement zero(int n) { return LSAElement(Matrix::zero(n, n), Vector(n)); }

    int dim() const { return C.rows(); }
    bool is_zero() const { return C.is_zero() && c.is_zero(); }

    friend bool operator==(const LSAElement& x, const LSAElement& y) {
        return x.C == y.C && x.c == y.c;
    }
    friend bool operator!=(const LSAElement& x, const LSAElement& y) { return !(x == y); }

    std::string to_string() const;
};

LSAElement lsa_product(const LSAElement& x, const LSAElement& y);
LSAElement lsa_add(const LSAElement& x, const LSAElement& y);
LSAElement lsa_scale(const Scalar& s, const LSAElement& x);

bool is_nilpotent(const Matrix& m);

/// exp of (C, c) with C nilpotent: linear part sum C^k/k!, translation
/// (sum C^k/(k+1)!) c. Exact; throws on a non-nilpotent C.
AffineMap exp_nilpotent(const LSAElement& x);

/// Inverse of exp_nilpotent; requires f.linear - I nilpotent.
LSAElement log_unipotent(const AffineMap& f);

}  // namespace affolab
