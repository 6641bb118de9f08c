#include "orthoconf/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace orthoconf {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) { return from_rows(columns).transpose(); }

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a) {
        if (row_idx[a] >= rows_) throw std::out_of_range("row index out of range");
        for (std::size_t b = 0; b < col_idx.size(); ++b) {
            if (col_idx[b] >= cols_) throw std::out_of_range("column index out of range");
            s(a, b) = (*this)(row_idx[a], col_idx[b]);
        }
    }
    return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

SymmetricMatrix::SymmetricMatrix(std::size_t size) : size_(size), data_(size * (size + 1) / 2) {}

SymmetricMatrix::SymmetricMatrix(std::size_t size, const std::function<Rational(std::size_t, std::size_t)>& entry)
    : SymmetricMatrix(size) {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) data_[index(i, j)] = entry(i, j);
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : SymmetricMatrix(from_matrix(Matrix(rows))) {}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("symmetric matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
    return SymmetricMatrix(m.rows(), [&](std::size_t i, std::size_t j) { return m(i, j); });
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    return SymmetricMatrix(n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
}

SymmetricMatrix SymmetricMatrix::with_entry(std::size_t i, std::size_t j, const Rational& value) const {
    SymmetricMatrix copy = *this;
    copy.data_[index(i, j)] = value;
    return copy;
}

Matrix SymmetricMatrix::to_matrix() const {
    Matrix m(size_, size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) m(i, j) = entry(i, j);
    return m;
}

std::size_t SymmetricMatrix::index(std::size_t i, std::size_t j) const {
    if (i >= size_ || j >= size_) throw std::out_of_range("symmetric matrix index out of range");
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return i * size_ - i * (i + 1) / 2 + j;
}

Rational bilinear(const SymmetricMatrix& form, const Vector& v, const Vector& w) {
    if (v.size() != form.size() || w.size() != form.size())
        throw std::invalid_argument("vector length does not match the form");
    Rational total;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Rational row;
        for (std::size_t j = 0; j < w.size(); ++j) {
            const Rational& f = form.entry(i, j);
            if (!f.is_zero() && !w[j].is_zero()) row += f * w[j];
        }
        total += v[i] * row;
    }
    return total;
}

}  // namespace orthoconf
