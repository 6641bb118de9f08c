#include "orthoconf/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orthoconf {

namespace {

using IntRow = std::vector<Integer>;

// Scales each row by the lcm of its denominators. `scale` receives the
// product of the multipliers used.
std::vector<IntRow> integer_rows(const Matrix& m, Integer& scale) {
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer d = m(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            rows[i][j] = x.numerator() * (l / x.denominator());
        }
        scale *= l;
    }
    return rows;
}

// Bareiss forward elimination with column skipping. Returns the rank; for a
// square full-rank input `det` holds the integer determinant.
std::size_t bareiss(std::vector<IntRow>& a, std::size_t cols, Integer& det) {
    const std::size_t rows = a.size();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            sign = -sign;
        }
        const Integer p = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer f = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = p * a[i][j] - f * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = p;
        ++r;
    }
    det = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
    if (rows == 0) det = 1;
    return r;
}

void check_indices(std::span<const std::size_t> idx, std::size_t bound) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= bound) throw std::out_of_range("minor index out of range");
        if (k > 0 && idx[k] <= idx[k - 1]) throw std::invalid_argument("minor indices must be strictly increasing");
    }
}

}  // namespace

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    Integer scale;
    auto rows = integer_rows(m, scale);
    Integer det;
    bareiss(rows, m.cols(), det);
    return Rational(det, scale);
}

Rational determinant(const SymmetricMatrix& m) { return determinant(m.to_matrix()); }

Rational minor_det(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor index lists differ in length");
    check_indices(rows, m.rows());
    check_indices(cols, m.cols());
    return determinant(m.submatrix(rows, cols));
}

Rational minor_det(const SymmetricMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    return minor_det(m.to_matrix(), rows, cols);
}

std::size_t rank(const Matrix& m) {
    Integer scale;
    auto rows = integer_rows(m, scale);
    Integer det;
    return bareiss(rows, m.cols(), det);
}

std::size_t rank(const SymmetricMatrix& m) { return rank(m.to_matrix()); }

Matrix adjugate(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    std::vector<std::size_t> keep_rows(n - 1), keep_cols(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adj(i, j) = (-1)^{i+j} * det(m without row j, column i)
            for (std::size_t k = 0, t = 0; k < n; ++k)
                if (k != j) keep_rows[t++] = k;
            for (std::size_t k = 0, t = 0; k < n; ++k)
                if (k != i) keep_cols[t++] = k;
            const Rational c = determinant(m.submatrix(keep_rows, keep_cols));
            adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    }
    return adj;
}

SymmetricMatrix adjugate(const SymmetricMatrix& m) { return SymmetricMatrix::from_matrix(adjugate(m.to_matrix())); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        }
        const Rational pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::optional<Matrix> cayley_transform(const Matrix& skew, const SymmetricMatrix& form) {
    const std::size_t n = form.size();
    if (skew.rows() != n || skew.cols() != n) throw std::invalid_argument("cayley transform shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (skew(i, j) != -skew(j, i)) throw std::invalid_argument("cayley transform needs a skew-symmetric matrix");
    const auto form_inv = inverse(form.to_matrix());
    if (!form_inv) throw std::invalid_argument("cayley transform needs a nondegenerate form");
    const Matrix k = *form_inv * skew;
    const Matrix id = Matrix::identity(n);
    const auto denom = inverse(id + k);
    if (!denom) return std::nullopt;
    return (id - k) * *denom;
}

bool preserves_form(const Matrix& a, const SymmetricMatrix& form) {
    const Matrix f = form.to_matrix();
    if (a.rows() != f.rows() || a.cols() != f.cols()) return false;
    return a.transpose() * f * a == f;
}

}  // namespace orthoconf
