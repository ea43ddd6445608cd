#include "affolab/affine.hpp"

namespace affolab {

AffineMap::AffineMap(Matrix linear, Vector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (!linear_.is_square()) throw std::invalid_argument("affine map: linear part must be square");
    if (linear_.rows() != translation_.size())
        throw std::invalid_argument("affine map: translation dimension mismatch");
    if (determinant(linear_).is_zero())
        throw std::domain_error("affine map: singular linear part");
}

AffineMap AffineMap::identity(int n) {
    return AffineMap(Matrix::identity(n), Vector(n));
}

AffineMap AffineMap::pure_translation(const Vector& v) {
    return AffineMap(Matrix::identity(v.size()), v);
}

Vector AffineMap::apply(const Vector& x) const {
    return linear_.apply(x) + translation_;
}

bool AffineMap::is_identity() const {
    return translation_.is_zero() && linear_ == Matrix::identity(dim());
}

std::string AffineMap::to_string() const {
    return "{linear=" + linear_.to_string() + ", t=" + translation_.to_string() + "}";
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("compose: dimension mismatch");
    return AffineMap(f.linear() * g.linear(), f.linear().apply(g.translation()) + f.translation());
}

AffineMap inverse(const AffineMap& f) {
    Matrix li = inverse(f.linear());
    return AffineMap(li, -li.apply(f.translation()));
}

BilinearForm::BilinearForm(Matrix omega) : omega_(std::move(omega)) {
    if (!omega_.is_square()) throw std::invalid_argument("bilinear form: matrix must be square");
    if (omega_.transpose() != -omega_)
        throw std::invalid_argument("bilinear form: matrix must be antisymmetric");
}

Scalar BilinearForm::eval(const Vector& u, const Vector& v) const {
    return dot(u, omega_.apply(v));
}

bool BilinearForm::is_symplectic() const {
    return dim() % 2 == 0 && !determinant(omega_).is_zero();
}

BilinearForm pullback_form(const AffineMap& f, const BilinearForm& omega) {
    if (f.dim() != omega.dim()) throw std::invalid_argument("pullback: dimension mismatch");
    return BilinearForm(f.linear().transpose() * omega.matrix() * f.linear());
}

LagrangianStatus lagrangian_status(const std::vector<Vector>& span, const BilinearForm& omega) {
    if (!omega.is_symplectic())
        throw std::invalid_argument("lagrangian test requires a symplectic form");
    int k = omega.dim() / 2;
    for (const auto& v : span)
        if (v.size() != omega.dim())
            throw std::invalid_argument("lagrangian test: span vector dimension mismatch");
    if (span.empty() || rank(from_columns(span)) != k) return LagrangianStatus::wrong_rank;
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = i + 1; j < span.size(); ++j)
            if (!omega.eval(span[i], span[j]).is_zero()) return LagrangianStatus::not_isotropic;
    return LagrangianStatus::lagrangian;
}

bool is_lagrangian(const std::vector<Vector>& span, const BilinearForm& omega) {
    return lagrangian_status(span, omega) == LagrangianStatus::lagrangian;
}

LSAElement::LSAElement(Matrix C_, Vector c_) : C(std::move(C_)), c(std::move(c_)) {
    if (!C.is_square()) throw std::invalid_argument("LSA element: matrix must be square");
    if (C.rows() != c.size()) throw std::invalid_argument("LSA element: vector dimension mismatch");
}

std::string LSAElement::to_string() const {
    return "(" + C.to_string() + ", " + c.to_string() + ")";
}

LSAElement lsa_product(const LSAElement& x, const LSAElement& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("LSA product: dimension mismatch");
    return LSAElement(x.C * y.C, x.C.apply(y.c));
}

LSAElement lsa_add(const LSAElement& x, const LSAElement& y) {
    return LSAElement(x.C + y.C, x.c + y.c);
}

LSAElement lsa_scale(const Scalar& s, const LSAElement& x) {
    return LSAElement(s * x.C, s * x.c);
}

bool is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("nilpotency test: matrix must be square");
    Matrix p = m;
    for (int k = 1; k <= m.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

AffineMap exp_nilpotent(const LSAElement& x) {
    if (!is_nilpotent(x.C)) throw std::domain_error("exp_nilpotent: matrix part is not nilpotent");
    int n = x.dim();
    Matrix lin = Matrix::identity(n);   // sum C^k / k!
    Matrix trans = Matrix::identity(n); // sum C^k / (k+1)!
    Matrix power = Matrix::identity(n);
    Rational kfact(1);
    for (int k = 1; k <= n; ++k) {
        power = power * x.C;
        if (power.is_zero()) break;
        kfact *= k;
        lin += Scalar(Rational(1) / kfact) * power;
        trans += Scalar(Rational(1) / (kfact * (k + 1))) * power;
    }
    return AffineMap(lin, trans.apply(x.c));
}

LSAElement log_unipotent(const AffineMap& f) {
    int n = f.dim();
    Matrix nil = f.linear() - Matrix::identity(n);
    if (!is_nilpotent(nil)) throw std::domain_error("log_unipotent: linear part is not unipotent");
    // log(I + N) = sum (-1)^{k+1} N^k / k, finite.
    Matrix logm(n, n);
    Matrix power = Matrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        power = power * nil;
        if (power.is_zero()) break;
        Rational coeff(k % 2 == 1 ? 1 : -1, k);
        logm += Scalar(coeff) * power;
    }
    // Solve (sum C^k/(k+1)!) c = translation for c.
    Matrix trans = Matrix::identity(n);
    Matrix cpow = Matrix::identity(n);
    Rational kfact(1);
    for (int k = 1; k <= n; ++k) {
        cpow = cpow * logm;
        if (cpow.is_zero()) break;
        kfact *= k;
        trans += Scalar(Rational(1) / (kfact * (k + 1))) * cpow;
    }
    return LSAElement(logm, inverse(trans).apply(f.translation()));
}

}  // namespace affolab
