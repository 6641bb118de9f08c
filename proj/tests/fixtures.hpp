#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "orthoconf/linalg.hpp"
#include "orthoconf/matrix.hpp"

namespace fixture {

using orthoconf::Matrix;
using orthoconf::Rational;
using orthoconf::SymmetricMatrix;
using orthoconf::Vector;

inline SymmetricMatrix counterexample() {
    return SymmetricMatrix{{0, 0, 1, 1, 1}, {0, 0, 1, 1, 1}, {1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 1, 0, 0, 1}};
}

// Gram of (a, a, b, b) with <a, b> = 1 on the hyperbolic plane.
inline SymmetricMatrix aabb() { return SymmetricMatrix{{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}; }

inline SymmetricMatrix hyperbolic_plane() { return SymmetricMatrix{{0, 1}, {1, 0}}; }

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long bound = 5, long den = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = oracle::random_rational(rng, bound, den);
    return m;
}

inline Vector random_vector(std::size_t n, std::mt19937_64& rng, long bound = 5, long den = 3) {
    Vector v(n);
    for (auto& x : v) x = oracle::random_rational(rng, bound, den);
    return v;
}

inline Matrix random_skew(std::size_t n, std::mt19937_64& rng) {
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            s(i, j) = oracle::random_rational(rng, 4, 3);
            s(j, i) = -s(i, j);
        }
    return s;
}

// A random A with A^T F A = F from the Cayley transform, retrying on a
// singular I + K.
inline Matrix random_orthogonal(const SymmetricMatrix& form, std::mt19937_64& rng) {
    while (true)
        if (auto q = orthoconf::cayley_transform(random_skew(form.size(), rng), form)) return *q;
}

// diag(1, ..., 1, -1): a Lorentzian form.
inline SymmetricMatrix lorentz(std::size_t size) {
    return SymmetricMatrix(size, [size](std::size_t i, std::size_t j) {
        if (i != j) return Rational(0);
        return Rational(i + 1 == size ? -1 : 1);
    });
}

}  // namespace fixture
