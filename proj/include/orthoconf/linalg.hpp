#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "orthoconf/matrix.hpp"

namespace orthoconf {

// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
// scaled to integers, so all intermediate work is on big integers.
Rational determinant(const Matrix& m);
Rational determinant(const SymmetricMatrix& m);

// Determinant of the submatrix on rows `rows` and columns `cols` (0-based,
// strictly increasing). Throws std::invalid_argument on unequal lengths or
// unsorted indices, std::out_of_range on an index past the matrix.
Rational minor_det(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
Rational minor_det(const SymmetricMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

// Works for any rectangular matrix.
std::size_t rank(const Matrix& m);
std::size_t rank(const SymmetricMatrix& m);

// Classical adjoint; M * adj(M) = det(M) * I also for singular M.
Matrix adjugate(const Matrix& m);
SymmetricMatrix adjugate(const SymmetricMatrix& m);

std::optional<Matrix> inverse(const Matrix& m);

// Cayley transform (I - K)(I + K)^{-1} with K = F^{-1} S. For skew-symmetric S
// the result Q satisfies Q^T F Q = F. Returns nullopt when I + K is singular.
std::optional<Matrix> cayley_transform(const Matrix& skew, const SymmetricMatrix& form);

bool preserves_form(const Matrix& a, const SymmetricMatrix& form);

}  // namespace orthoconf
