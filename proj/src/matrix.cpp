#include "affolab/matrix.hpp"

#include <sstream>

namespace affolab {

namespace {
void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace

Vector Vector::unit(int n, int i) {
    Vector v(n);
    v[i] = Scalar(1);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Vector::operator-() const {
    Vector r = *this;
    for (auto& x : r.v_) x = -x;
    return r;
}

Vector& Vector::operator+=(const Vector& o) {
    require(size() == o.size(), "vector size mismatch");
    for (int i = 0; i < size(); ++i) v_[i] += o[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require(size() == o.size(), "vector size mismatch");
    for (int i = 0; i < size(); ++i) v_[i] -= o[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    for (auto& x : v_) x *= s;
    return *this;
}

std::string Vector::key() const {
    std::string k = std::to_string(size());
    for (const auto& x : v_) {
        k += ';';
        k += x.key();
    }
    return k;
}

std::string Vector::to_string() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ", ";
        s += v_[i].to_string();
    }
    return s + ")";
}

Scalar dot(const Vector& x, const Vector& y) {
    require(x.size() == y.size(), "vector size mismatch");
    Scalar s;
    for (int i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, "ragged matrix initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix dimension mismatch in addition");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix dimension mismatch in subtraction");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    require(x.cols_ == y.rows_, "matrix dimension mismatch in product");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& s, Matrix x) {
    for (auto& v : x.a_) v *= s;
    return x;
}

Vector Matrix::apply(const Vector& v) const {
    require(cols_ == v.size(), "matrix/vector dimension mismatch");
    Vector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Vector Matrix::row(int i) const {
    Vector r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vector Matrix::col(int j) const {
    Vector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void Matrix::set_row(int i, const Vector& v) {
    require(v.size() == cols_, "row size mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(int j, const Vector& v) {
    require(v.size() == rows_, "column size mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

std::string Matrix::key() const {
    std::string k = std::to_string(rows_) + "x" + std::to_string(cols_);
    for (const auto& x : a_) {
        k += ';';
        k += x.key();
    }
    return k;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

Matrix from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(cols[0].size(), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
    return m;
}

RrefResult rref(Matrix m) {
    RrefResult res;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
        Scalar inv = m.at(lead, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(lead, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    res.reduced = std::move(m);
    return res;
}

int rank(const Matrix& m) {
    return rref(m).rank;
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = m;
    int n = a.rows();
    Scalar det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col) * inv;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    RrefResult r = rref(aug);
    for (int i = 0; i < n; ++i)
        if (i >= r.rank || r.pivot_cols[i] != i) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vector v(m.cols());
        v[free] = Scalar(1);
        for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (int c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    Vector x(m.cols());
    for (int i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced.at(i, m.cols());
    return x;
}

std::vector<int> independent_subset(const std::vector<Vector>& vecs) {
    if (vecs.empty()) return {};
    return rref(from_columns(vecs)).pivot_cols;
}

std::optional<Vector> span_coefficients(const std::vector<Vector>& vecs, const Vector& target) {
    if (vecs.empty()) {
        if (target.is_zero()) return Vector(0);
        return std::nullopt;
    }
    return solve(from_columns(vecs), target);
}

}  // namespace affolab
