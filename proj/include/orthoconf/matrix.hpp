#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "orthoconf/rational.hpp"

namespace orthoconf {

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

// m x m symmetric matrix; only the upper triangle is stored, so
// entry(i, j) == entry(j, i) holds by construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t size);
    SymmetricMatrix(std::size_t size, const std::function<Rational(std::size_t, std::size_t)>& entry);
    SymmetricMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    // Throws std::invalid_argument unless m is square and symmetric.
    static SymmetricMatrix from_matrix(const Matrix& m);
    static SymmetricMatrix identity(std::size_t n);

    std::size_t size() const { return size_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entry(i, j); }

    // Copy with entries (i, j) and (j, i) replaced.
    SymmetricMatrix with_entry(std::size_t i, std::size_t j, const Rational& value) const;

    Matrix to_matrix() const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t size_ = 0;
    std::vector<Rational> data_;
};

// v^T F w
Rational bilinear(const SymmetricMatrix& form, const Vector& v, const Vector& w);

}  // namespace orthoconf
