#pragma once

#include "jjalg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace jjalg {

class Vec {
public:
    Vec(Field f, std::size_t n) : field_(f), e_(n, Scalar::zero(f)) {}
    Vec(Field f, std::vector<Scalar> entries);
    static Vec basis(Field f, std::size_t n, std::size_t i);

    std::size_t size() const { return e_.size(); }
    Field field() const { return field_; }
    Scalar& operator[](std::size_t i) { return e_[i]; }
    const Scalar& operator[](std::size_t i) const { return e_[i]; }
    bool is_zero() const;

    Vec operator+(const Vec&) const;
    Vec operator-(const Vec&) const;
    Vec operator-() const;
    Vec scaled(const Scalar&) const;
    bool operator==(const Vec&) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    Vec to_field(Field target) const;

private:
    Field field_;
    std::vector<Scalar> e_;
};

class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const;
    Matrix operator+(const Matrix&) const;
    Matrix operator-(const Matrix&) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix&) const;
    Matrix scaled(const Scalar&) const;
    Matrix transpose() const;
    Vec apply(const Vec&) const;
    Vec col(std::size_t c) const;
    Vec row(std::size_t r) const;
    bool operator==(const Matrix&) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix to_field(Field target) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;  // row-major
};

/// Dense tensor, entries flat in lexicographic multi-index order.
class Tensor {
public:
    Tensor(Field f, std::vector<std::size_t> shape);

    Field field() const { return field_; }
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t flat_size() const { return e_.size(); }

    Scalar& flat(std::size_t i) { return e_[i]; }
    const Scalar& flat(std::size_t i) const { return e_[i]; }
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
    Scalar& at(const std::vector<std::size_t>& idx) { return e_[flat_index(idx)]; }
    const Scalar& at(const std::vector<std::size_t>& idx) const { return e_[flat_index(idx)]; }

    bool is_zero() const;
    bool operator==(const Tensor&) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }
    Tensor operator+(const Tensor&) const;
    Tensor operator-(const Tensor&) const;
    Tensor scaled(const Scalar&) const;

    Tensor to_field(Field target) const;

private:
    Field field_;
    std::vector<std::size_t> shape_;
    std::vector<Scalar> e_;
};

/// Linear map between based spaces; columns are images of source basis vectors.
class LinearMap {
public:
    explicit LinearMap(Matrix m) : m_(std::move(m)) {}
    static LinearMap zero(Field f, std::size_t dst, std::size_t src) {
        return LinearMap(Matrix(f, dst, src));
    }
    static LinearMap identity(Field f, std::size_t n) {
        return LinearMap(Matrix::identity(f, n));
    }

    std::size_t src_dim() const { return m_.cols(); }
    std::size_t dst_dim() const { return m_.rows(); }
    Field field() const { return m_.field(); }
    const Matrix& matrix() const { return m_; }
    Matrix& matrix() { return m_; }

    Vec apply(const Vec& v) const { return m_.apply(v); }
    LinearMap compose(const LinearMap& inner) const;  // this after inner
    LinearMap inverse() const;                        // throws singular_matrix_error
    bool invertible() const;
    LinearMap operator+(const LinearMap& o) const { return LinearMap(m_ + o.m_); }
    LinearMap operator-(const LinearMap& o) const { return LinearMap(m_ - o.m_); }
    LinearMap scaled(const Scalar& s) const { return LinearMap(m_.scaled(s)); }
    bool operator==(const LinearMap& o) const { return m_ == o.m_; }
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

    LinearMap to_field(Field target) const { return LinearMap(m_.to_field(target)); }

private:
    Matrix m_;
};

/// Reduced row echelon form (unit pivots, pivot columns cleared).
Matrix rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Right-kernel basis, RREF free-column convention, ascending free columns.
std::vector<Vec> kernel_basis(const Matrix& m);

Matrix inverse(const Matrix& m);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Iterates over all multi-indices below `shape` in lexicographic order.
/// Starts at (0,...,0); next() returns false after the last index.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<std::size_t> shape);
    bool valid() const { return valid_; }
    const std::vector<std::size_t>& idx() const { return idx_; }
    bool next();

private:
    std::vector<std::size_t> shape_;
    std::vector<std::size_t> idx_;
    bool valid_;
};

}  // namespace jjalg
