#include <random>
#include <stdexcept>

#include "orthoconf/linalg.hpp"
#include "orthoconf/sphere.hpp"

namespace orthoconf {

namespace {

// Basis of {z : row_i . z = 0 for all i}, by reduced row echelon form.
std::vector<Vector> null_space(std::vector<Vector> rows, std::size_t dim) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = Rational(1) / rows[r][c];
        rows[r] = inv * rows[r];
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && !rows[i][c].is_zero()) rows[i] = rows[i] - rows[i][c] * rows[r];
        pivots.push_back(c);
        ++r;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0, k = 0; free < dim; ++free) {
        if (k < pivots.size() && pivots[k] == free) {
            ++k;
            continue;
        }
        Vector z(dim);
        z[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(z));
    }
    return basis;
}

// s_w(x) = x - 2 <x, w> / <w, w> w as a matrix: I - 2 w (F w)^T / <w, w>.
Matrix reflection(const Vector& w, const SymmetricMatrix& form) {
    const std::size_t n = w.size();
    const Vector fw = form.to_matrix() * w;
    const Rational c = Rational(2) / bilinear(form, w, w);
    Matrix s = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) -= c * w[i] * fw[j];
    return s;
}

}  // namespace

std::optional<Matrix> recover_isometry(const PointConfiguration& x, const PointConfiguration& y) {
    if (x.size() != y.size()) throw std::invalid_argument("configurations have different sizes");
    if (!(x.form() == y.form())) throw std::invalid_argument("configurations use different forms");
    const std::size_t m = x.size();
    const std::size_t dim = x.form().size();
    if (rank(Matrix::from_columns(x.vectors())) < m) throw std::invalid_argument("source vectors are dependent");
    if (!(gram_matrix(x) == gram_matrix(y))) return std::nullopt;
    if (rank(Matrix::from_columns(y.vectors())) < m) return std::nullopt;

    const SymmetricMatrix& form = x.form();
    const Matrix f = form.to_matrix();
    Matrix a = Matrix::identity(dim);
    std::mt19937_64 rng(0x5eed);
    for (std::size_t i = 0; i < m; ++i) {
        Vector current = a * x[i];
        if (current == y[i]) continue;
        // Reflections are taken in vectors orthogonal to y_0..y_{i-1}, which
        // they therefore fix.
        Vector w = current - y[i];
        if (bilinear(form, w, w).is_zero()) {
            std::vector<Vector> constraints;
            for (std::size_t j = 0; j < i; ++j) constraints.push_back(f * y[j]);
            const auto basis = null_space(constraints, dim);
            bool found = false;
            for (int attempt = 0; attempt < 256 && !found; ++attempt) {
                Vector z(dim);
                for (const auto& b : basis) z = z + Rational(static_cast<long>(rng() % 7) - 3) * b;
                if (bilinear(form, z, z).is_zero()) continue;
                const Matrix s = reflection(z, form);
                const Vector moved = s * current;
                const Vector w2 = moved - y[i];
                if (is_zero(w2)) {
                    a = s * a;
                    found = true;
                } else if (!bilinear(form, w2, w2).is_zero()) {
                    a = reflection(w2, form) * s * a;
                    found = true;
                }
            }
            if (!found) throw std::runtime_error("no non-isotropic reflection found while extending the isometry");
        } else {
            a = reflection(w, form) * a;
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!(a * x[i] == y[i])) throw std::logic_error("recovered map does not send x_i to y_i");
    if (!preserves_form(a, form)) throw std::logic_error("recovered map does not preserve the form");
    return a;
}

}  // namespace orthoconf
