#pragma once

#include "affolab/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace affolab {

class Vector {
public:
    Vector() = default;
    explicit Vector(int n) : v_(static_cast<size_t>(n)) {}
    Vector(std::initializer_list<Scalar> xs) : v_(xs) {}
    explicit Vector(std::vector<Scalar> xs) : v_(std::move(xs)) {}

    static Vector unit(int n, int i);

    int size() const { return static_cast<int>(v_.size()); }
    const Scalar& operator[](int i) const { return v_[static_cast<size_t>(i)]; }
    Scalar& operator[](int i) { return v_[static_cast<size_t>(i)]; }

    bool is_zero() const;

    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector x, const Vector& y) { return x += y; }
    friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
    friend Vector operator*(const Scalar& s, Vector x) { return x *= s; }

    friend bool operator==(const Vector& x, const Vector& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Vector& x, const Vector& y) { return !(x == y); }

    std::string key() const;
    std::string to_string() const;

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

private:
    std::vector<Scalar> v_;
};

Scalar dot(const Vector& x, const Vector& y);

/// Dense matrix of exact scalars. Desk scale (n up to a dozen or so);
/// everything is straightforward Gauss over the field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }
    Scalar& at(int i, int j) { return a_[idx(i, j)]; }

    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
    friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Scalar& s, Matrix x);
    Vector apply(const Vector& v) const;

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Vector row(int i) const;
    Vector col(int j) const;
    void set_row(int i, const Vector& v);
    void set_col(int j, const Vector& v);

    /// Submatrix keeping the listed rows/columns, in the given order.
    Matrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

    std::string key() const;
    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
};

Matrix from_columns(const std::vector<Vector>& cols);

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row echelon form; exact, first-nonzero pivoting.
RrefResult rref(Matrix m);

int rank(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Throws std::domain_error on a singular matrix.
Matrix inverse(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Indices of a maximal linearly independent subset of the given vectors,
/// scanned left to right.
std::vector<int> independent_subset(const std::vector<Vector>& vecs);

/// Coefficients expressing target in the span of vecs, or nullopt.
std::optional<Vector> span_coefficients(const std::vector<Vector>& vecs, const Vector& target);

}  // namespace affolab
